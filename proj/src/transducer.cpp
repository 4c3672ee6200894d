#include "tx/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "tx/error.hpp"

namespace tx {

int Transducer::add_state(std::string name) {
    names.push_back(std::move(name));
    next.emplace_back(static_cast<std::size_t>(letters()), kNone);
    out.emplace_back(static_cast<std::size_t>(letters()));
    return size() - 1;
}

void Transducer::set(int q, Letter a, int to, Word w) {
    next[q][a] = to;
    out[q][a] = std::move(w);
}

int Transducer::find_state(const std::string& name) const {
    for (int q = 0; q < size(); ++q)
        if (names[q] == name) return q;
    return kNone;
}

int Transducer::dotted_root() const {
    if (r == 0) return kNone;
    for (int q = 0; q < size(); ++q)
        if (next[q][n] != kNone) return q;
    return kNone;
}

namespace {

std::string state_label(const Transducer& t, int q) {
    return q >= 0 && q < static_cast<int>(t.names.size()) ? t.names[q] : std::to_string(q);
}

// Depth-first search for a cycle made of empty-output edges.
bool has_empty_cycle(const Transducer& t) {
    std::vector<int> color(static_cast<std::size_t>(t.size()), 0);
    for (int s = 0; s < t.size(); ++s) {
        if (color[s]) continue;
        std::vector<std::pair<int, int>> stack{{s, 0}};
        color[s] = 1;
        while (!stack.empty()) {
            auto& [q, a] = stack.back();
            if (a == t.letters()) {
                color[q] = 2;
                stack.pop_back();
                continue;
            }
            int letter = a++;
            int to = t.next[q][letter];
            if (to == kNone || !t.out[q][letter].empty()) continue;
            if (color[to] == 1) return true;
            if (color[to] == 0) {
                color[to] = 1;
                stack.emplace_back(to, 0);
            }
        }
    }
    return false;
}

}  // namespace

void validate(const Transducer& t) {
    if (t.n < 2) throw Error(Errc::InvalidInput, "alphabet needs n >= 2");
    if (t.r < 0) throw Error(Errc::InvalidInput, "negative root count");
    if (t.size() == 0) throw Error(Errc::InvalidInput, "transducer has no states");
    if (t.out.size() != t.next.size() || t.names.size() != t.next.size())
        throw Error(Errc::InvalidInput, "inconsistent table sizes");
    int root = t.dotted_root();
    if (t.r > 0 && root == kNone) throw Error(Errc::InvalidInput, "no state reads the dotted roots");
    for (int q = 0; q < t.size(); ++q) {
        if (static_cast<int>(t.next[q].size()) != t.letters() ||
            static_cast<int>(t.out[q].size()) != t.letters())
            throw Error(Errc::InvalidInput, "row size mismatch at state " + state_label(t, q));
        for (Letter a = 0; a < t.letters(); ++a) {
            bool dotted = a >= t.n;
            bool expect = t.r == 0 || (q == root) == dotted;
            int to = t.next[q][a];
            if ((to != kNone) != expect)
                throw Error(Errc::InvalidInput, "missing or unexpected transition at state " +
                                                    state_label(t, q) + " letter " +
                                                    std::to_string(a));
            if (to == kNone) continue;
            if (to < 0 || to >= t.size())
                throw Error(Errc::InvalidInput, "transition target out of range");
            if (t.r > 0 && to == root)
                throw Error(Errc::InvalidInput, "transition back into the dotted root");
            for (Letter b : t.out[q][a])
                if (b < 0 || b >= t.letters())
                    throw Error(Errc::InvalidInput, "output letter out of range at state " +
                                                        state_label(t, q));
        }
    }
    if (t.r > 0) {
        // Region R: states reached from the root before any output is produced.
        std::vector<char> inR(static_cast<std::size_t>(t.size()), 0);
        std::deque<int> work{root};
        inR[root] = 1;
        while (!work.empty()) {
            int q = work.front();
            work.pop_front();
            for (Letter a = 0; a < t.letters(); ++a) {
                int to = t.next[q][a];
                if (to != kNone && t.out[q][a].empty() && !inR[to]) {
                    inR[to] = 1;
                    work.push_back(to);
                }
            }
        }
        for (int q = 0; q < t.size(); ++q)
            for (Letter a = 0; a < t.letters(); ++a) {
                int to = t.next[q][a];
                if (to == kNone) continue;
                const Word& w = t.out[q][a];
                if (inR[q]) {
                    if (w.empty()) continue;
                    if (inR[to])
                        throw Error(Errc::InvalidInput, "region R state re-entered after output");
                    check_word(w, t.n, t.r);
                    if (w[0] < t.n)
                        throw Error(Errc::InvalidInput,
                                    "first output leaving R must start with a dotted root");
                } else {
                    if (inR[to])
                        throw Error(Errc::InvalidInput, "transition from S back into R");
                    check_word(w, t.n, 0);
                }
            }
    }
    if (has_empty_cycle(t))
        throw Error(Errc::Degenerate, "a cycle with empty total output exists");
}

std::pair<Word, int> evaluate(const Transducer& t, int q, const Word& w) {
    if (q < 0 || q >= t.size()) throw Error(Errc::InvalidInput, "state out of range");
    Word res;
    for (Letter a : w) {
        if (a < 0 || a >= t.letters() || t.next[q][a] == kNone)
            throw Error(Errc::InvalidInput, "letter " + std::to_string(a) +
                                                " cannot be read from state " + state_label(t, q));
        res.insert(res.end(), t.out[q][a].begin(), t.out[q][a].end());
        q = t.next[q][a];
    }
    return {res, q};
}

EvPeriodicWord evaluate_periodic(const Transducer& t, int q, const EvPeriodicWord& x) {
    auto [head, s] = evaluate(t, q, x.pre);
    std::map<int, std::size_t> seen;
    std::vector<Word> rounds;
    while (!seen.count(s)) {
        seen[s] = rounds.size();
        auto [w, e] = evaluate(t, s, x.period);
        rounds.push_back(std::move(w));
        s = e;
    }
    std::size_t loop = seen[s];
    Word pre = head, per;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        Word& dst = i < loop ? pre : per;
        dst.insert(dst.end(), rounds[i].begin(), rounds[i].end());
    }
    if (per.empty()) throw Error(Errc::Degenerate, "periodic input produces finite output");
    return EvPeriodicWord::make(std::move(pre), std::move(per));
}

Transducer product(const Transducer& a, const Transducer& b) {
    if (a.n != b.n) throw Error(Errc::InvalidInput, "product of machines over different alphabets");
    if (a.r != 0 || b.r != 0)
        throw Error(Errc::InvalidInput, "unrooted product needs machines over X_n");
    Transducer t(a.n, 0);
    for (int q = 0; q < a.size(); ++q)
        for (int p = 0; p < b.size(); ++p) t.add_state(a.names[q] + "_" + b.names[p]);
    for (int q = 0; q < a.size(); ++q)
        for (int p = 0; p < b.size(); ++p)
            for (Letter x = 0; x < a.n; ++x) {
                auto [w, p2] = evaluate(b, p, a.out[q][x]);
                t.set(q * b.size() + p, x, a.next[q][x] * b.size() + p2, std::move(w));
            }
    return t;
}

Rooted product(const Rooted& a, const Rooted& b) {
    if (a.m.n != b.m.n || a.m.r != b.m.r)
        throw Error(Errc::InvalidInput, "product of machines over different spaces");
    Transducer t(a.m.n, a.m.r);
    std::map<std::pair<int, int>, int> index;
    std::deque<std::pair<int, int>> work;
    auto id = [&](int q, int p) {
        auto [it, fresh] = index.emplace(std::make_pair(q, p), t.size());
        if (fresh) {
            t.add_state(a.m.names[q] + "_" + b.m.names[p]);
            work.emplace_back(q, p);
        }
        return it->second;
    };
    id(a.root, b.root);
    while (!work.empty()) {
        auto [q, p] = work.front();
        work.pop_front();
        int self = index[{q, p}];
        for (Letter x = 0; x < t.letters(); ++x) {
            if (a.m.next[q][x] == kNone) continue;
            auto [w, p2] = evaluate(b.m, p, a.m.out[q][x]);
            int to = id(a.m.next[q][x], p2);
            t.set(self, x, to, std::move(w));
        }
    }
    return Rooted{std::move(t), 0};
}

Transducer restrict_states(const Transducer& t, const std::vector<int>& keep) {
    std::vector<int> map(static_cast<std::size_t>(t.size()), kNone);
    for (std::size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
    Transducer r(t.n, t.r);
    for (int q : keep) r.add_state(t.names[q]);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int q = keep[i];
        for (Letter a = 0; a < t.letters(); ++a) {
            int to = t.next[q][a];
            if (to == kNone) continue;
            if (map[to] == kNone)
                throw Error(Errc::Internal, "restriction is not closed under transitions");
            r.set(static_cast<int>(i), a, map[to], t.out[q][a]);
        }
    }
    return r;
}

Rooted accessible(const Rooted& t) {
    std::vector<char> seen(static_cast<std::size_t>(t.m.size()), 0);
    std::deque<int> work{t.root};
    seen[t.root] = 1;
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (int to : t.m.next[q])
            if (to != kNone && !seen[to]) {
                seen[to] = 1;
                work.push_back(to);
            }
    }
    std::vector<int> keep;
    int root = 0;
    for (int q = 0; q < t.m.size(); ++q)
        if (seen[q]) {
            if (q == t.root) root = static_cast<int>(keep.size());
            keep.push_back(q);
        }
    return Rooted{restrict_states(t.m, keep), root};
}

Word forced_prefix(const Transducer& t, int q, int depth) {
    Word g;
    std::set<std::pair<Word, int>> cur{{Word{}, q}};
    for (;;) {
        // Expand pending pairs that have produced nothing beyond g yet.
        std::set<int> expanded;
        for (;;) {
            auto it = std::find_if(cur.begin(), cur.end(),
                                   [](const auto& pr) { return pr.first.empty(); });
            if (it == cur.end()) break;
            int s = it->second;
            cur.erase(it);
            if (!expanded.insert(s).second) continue;
            for (Letter a = 0; a < t.letters(); ++a)
                if (t.next[s][a] != kNone) cur.emplace(t.out[s][a], t.next[s][a]);
        }
        if (cur.empty()) throw Error(Errc::Degenerate, "state with no continuation");
        Letter c = cur.begin()->first[0];
        for (const auto& pr : cur)
            if (pr.first[0] != c) return g;
        g.push_back(c);
        if (static_cast<int>(g.size()) > depth)
            throw Error(Errc::DepthExceeded, "common output prefix of state " + state_label(t, q) +
                                                 " exceeds " + std::to_string(depth) + " letters");
        std::set<std::pair<Word, int>> stripped;
        for (const auto& pr : cur) stripped.emplace(Word(pr.first.begin() + 1, pr.first.end()), pr.second);
        cur.swap(stripped);
    }
}

bool has_incomplete_response(const Transducer& t, int depth) {
    for (int q = 0; q < t.size(); ++q)
        for (Letter a = 0; a < t.letters(); ++a) {
            int to = t.next[q][a];
            if (to != kNone && !forced_prefix(t, to, depth).empty()) return true;
        }
    return false;
}

Rooted remove_incomplete_response(const Rooted& in, int depth) {
    Rooted t = accessible(in);
    std::vector<Word> P(static_cast<std::size_t>(t.m.size()));
    for (int q = 0; q < t.m.size(); ++q) P[q] = forced_prefix(t.m, q, depth);
    Transducer res(t.m.n, t.m.r);
    for (int q = 0; q < t.m.size(); ++q) res.add_state(t.m.names[q]);
    for (int q = 0; q < t.m.size(); ++q)
        for (Letter a = 0; a < t.m.letters(); ++a) {
            int to = t.m.next[q][a];
            if (to == kNone) continue;
            res.set(q, a, to, subtract_prefix(concat(t.m.out[q][a], P[to]), P[q]));
        }
    int root = t.root;
    if (!P[t.root].empty()) {
        // The root keeps its full behaviour; a stripped copy serves re-entries.
        root = res.add_state(t.m.names[t.root] + "'");
        for (Letter a = 0; a < t.m.letters(); ++a) {
            int to = t.m.next[t.root][a];
            if (to != kNone) res.set(root, a, to, concat(t.m.out[t.root][a], P[to]));
        }
    }
    return accessible(Rooted{std::move(res), root});
}

Rooted bfs_numbering(const Rooted& t) {
    std::vector<int> order{t.root};
    std::vector<int> map(static_cast<std::size_t>(t.m.size()), kNone);
    map[t.root] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int to : t.m.next[order[i]])
            if (to != kNone && map[to] == kNone) {
                map[to] = static_cast<int>(order.size());
                order.push_back(to);
            }
    return Rooted{restrict_states(t.m, order), 0};
}

Rooted minimize(const Rooted& in, int depth) {
    Rooted t = remove_incomplete_response(in, depth);
    const Transducer& m = t.m;
    int N = m.size();
    std::vector<int> block(static_cast<std::size_t>(N));
    {
        std::map<std::vector<Word>, int> ids;
        for (int q = 0; q < N; ++q) {
            std::vector<Word> key;
            for (Letter a = 0; a < m.letters(); ++a)
                key.push_back(m.next[q][a] == kNone ? Word{-1} : m.out[q][a]);
            block[q] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
        }
    }
    int count = *std::max_element(block.begin(), block.end()) + 1;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> nb(static_cast<std::size_t>(N));
        for (int q = 0; q < N; ++q) {
            std::vector<int> key{block[q]};
            for (int to : m.next[q]) key.push_back(to == kNone ? kNone : block[to]);
            nb[q] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
        }
        int nc = static_cast<int>(ids.size());
        block.swap(nb);
        if (nc == count) break;
        count = nc;
    }
    Transducer qt(m.n, m.r);
    std::vector<int> rep(static_cast<std::size_t>(count), kNone);
    for (int q = 0; q < N; ++q)
        if (rep[block[q]] == kNone) rep[block[q]] = q;
    for (int b = 0; b < count; ++b) qt.add_state(m.names[rep[b]]);
    for (int b = 0; b < count; ++b)
        for (Letter a = 0; a < m.letters(); ++a) {
            int to = m.next[rep[b]][a];
            if (to != kNone) qt.set(b, a, block[to], m.out[rep[b]][a]);
        }
    return bfs_numbering(Rooted{std::move(qt), block[t.root]});
}

Rooted minimize_rooted(const Transducer& t, int q, int depth) { return minimize(Rooted{t, q}, depth); }

bool same_table(const Transducer& a, const Transducer& b) {
    return a.n == b.n && a.r == b.r && a.next == b.next && a.out == b.out;
}

bool same_machine(const Rooted& a, const Rooted& b) {
    return same_table(bfs_numbering(a).m, bfs_numbering(b).m);
}

bool omega_equivalent(const Transducer& t, int q1, int q2, int depth) {
    return same_machine(minimize_rooted(t, q1, depth), minimize_rooted(t, q2, depth));
}

}  // namespace tx
