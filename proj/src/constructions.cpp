#include "tx/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tx/error.hpp"
#include "tx/image.hpp"
#include "tx/signature.hpp"
#include "tx/sync.hpp"

namespace tx {

Transducer identity(int n) {
    Transducer t(n);
    t.add_state("q");
    for (Letter x = 0; x < n; ++x) t.set(0, x, 0, {x});
    return t;
}

Transducer permutation(const std::vector<Letter>& perm) {
    Transducer t(static_cast<int>(perm.size()));
    t.add_state("q");
    for (Letter x = 0; x < t.n; ++x) t.set(0, x, 0, {perm[x]});
    return t;
}

Transducer pi_R(int n) {
    std::vector<Letter> perm(static_cast<std::size_t>(n));
    for (Letter x = 0; x < n; ++x) perm[x] = n - 1 - x;
    return permutation(perm);
}

Transducer example_g() {
    Transducer t(4);
    int a = t.add_state("a"), b = t.add_state("b");
    t.set(a, 0, a, {0});
    t.set(a, 2, a, {1});
    t.set(a, 1, b, {0});
    t.set(a, 3, b, {1});
    t.set(b, 1, b, {2});
    t.set(b, 3, b, {3});
    t.set(b, 0, a, {2});
    t.set(b, 2, a, {3});
    return t;
}

static void require_n3(int n) {
    if (n < 3) throw Error(Errc::InvalidInput, "T and U need n >= 3");
}

// The generic middle letter x stands for every letter strictly between 0 and n-1.
Transducer example_T(int n) {
    require_n3(n);
    const Letter N = n - 1;
    Transducer t(n);
    int a = t.add_state("a"), b = t.add_state("b"), c = t.add_state("c");
    t.set(a, N, b, {N, N});
    t.set(a, 0, c, {});
    t.set(b, 0, b, {0});
    t.set(b, N, b, {N});
    t.set(c, N, b, {N, 0});
    t.set(c, 0, b, {0});
    for (Letter x = 1; x < N; ++x) {
        t.set(a, x, a, {N, x});
        t.set(b, x, a, {x});
        t.set(c, x, a, {x});
    }
    return t;
}

Transducer example_U(int n) {
    require_n3(n);
    const Letter N = n - 1;
    Transducer t(n);
    int p = t.add_state("p"), q = t.add_state("q"), s = t.add_state("s"), u = t.add_state("t");
    t.set(p, 0, q, {0});
    t.set(p, N, s, {N});
    t.set(q, 0, u, {});
    t.set(q, N, s, {N, N});
    t.set(s, 0, s, {0});
    t.set(s, N, s, {N});
    t.set(u, N, s, {N, 0});
    t.set(u, 0, s, {0});
    for (Letter x = 1; x < N; ++x) {
        t.set(p, x, p, {x});
        t.set(q, x, p, {N, x});
        t.set(s, x, p, {x});
        t.set(u, x, p, {x});
    }
    return t;
}

// Keep the letters 0 and n-1 only, renamed 0 and 1.
static Transducer two_letter_restriction(const Transducer& t) {
    const Letter N = t.n - 1;
    Transducer r(2);
    for (const auto& nm : t.names) r.add_state(nm);
    for (int q = 0; q < t.size(); ++q)
        for (Letter x : {Letter{0}, N}) {
            Word w;
            for (Letter y : t.out[q][x]) {
                if (y != 0 && y != N) throw Error(Errc::Internal, "restriction leaves {0, n-1}");
                w.push_back(y == N ? 1 : 0);
            }
            r.set(q, x == N ? 1 : 0, t.next[q][x], std::move(w));
        }
    return r;
}

Transducer example_A(int n) { return two_letter_restriction(example_T(n)); }
Transducer example_B(int n) { return two_letter_restriction(example_U(n)); }

Rooted identity_initial(int n, int r) {
    Transducer t(n, r);
    int root = t.add_state("q0"), id = t.add_state("id");
    for (int k = 0; k < r; ++k) t.set(root, n + k, id, {n + k});
    for (Letter x = 0; x < n; ++x) t.set(id, x, id, {x});
    return Rooted{std::move(t), root};
}

// Copy of g over C_{n,r} with an extra dotted root.
static Transducer lift(const Transducer& g, int r) {
    Transducer t(g.n, r);
    for (const auto& nm : g.names) t.add_state(nm);
    for (int q = 0; q < g.size(); ++q)
        for (Letter x = 0; x < g.n; ++x) t.set(q, x, g.next[q][x], g.out[q][x]);
    return t;
}

Rooted wrap_state(const Transducer& g, int q, int r) {
    if (r < 1) throw Error(Errc::InvalidInput, "need at least one root");
    Transducer t = lift(g, r);
    int root = t.add_state("q0");
    for (int k = 0; k < r; ++k) t.set(root, g.n + k, q, {g.n + k});
    return Rooted{std::move(t), root};
}

bool is_Hd(const Transducer& t) {
    if (t.r != 0 || t.size() == 0) return false;
    for (int q = 0; q < t.size(); ++q) {
        std::set<Letter> seen;
        for (Letter x = 0; x < t.n; ++x) {
            if (t.out[q][x].size() != 1) return false;
            seen.insert(t.out[q][x][0]);
        }
        if (static_cast<int>(seen.size()) != t.n) return false;
    }
    if (t.n == 1) return t.size() == 1;
    return is_synchronizing(t);
}

// The unique state q with pi(b, q) = q; it exists and is unique in a
// synchronizing machine.
static int loop_state(const Transducer& t, Letter b) {
    int found = kNone;
    for (int q = 0; q < t.size(); ++q)
        if (t.next[q][b] == q) {
            if (found != kNone) throw Error(Errc::Internal, "loop state is not unique");
            found = q;
        }
    if (found == kNone) throw Error(Errc::Internal, "no loop state");
    return found;
}

Transducer oplus(int d, const Transducer& t, int n) {
    if (d < 1 || d >= n || n % d != 0)
        throw Error(Errc::InvalidInput, "d must be a proper divisor of n");
    if (t.n != d) throw Error(Errc::InvalidInput, "machine must be over X_d");
    if (!is_Hd(t)) throw Error(Errc::InvalidInput, "machine is not an element of H_d");
    const int m = n / d, Q = t.size();
    Transducer res(n);
    for (int i = 0; i < m; ++i)
        for (int q = 0; q < Q; ++q) res.add_state(t.names[q] + "(" + std::to_string(i) + ")");
    std::vector<int> qb(static_cast<std::size_t>(d));
    for (Letter b = 0; b < d; ++b) qb[b] = loop_state(t, b);
    for (int i = 0; i < m; ++i)
        for (int q = 0; q < Q; ++q) {
            int self = i * Q + q;
            for (int j = 0; j < m; ++j)
                for (Letter b = 0; b < d; ++b) {
                    Letter x = d * j + b;
                    if (j == i)
                        res.set(self, x, i * Q + t.next[q][b], {d * i + t.out[q][b][0]});
                    else
                        res.set(self, x, j * Q + qb[b], {d * i + b});
                }
        }
    return res;
}

// ---- prefix exchanges ----

static bool is_complete_antichain(const std::vector<Word>& ws, int n, int r) {
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
            if (comparable(ws[i], ws[j])) return false;
    return canonicalize_clopen(n, r, ws).is_whole();
}

static std::vector<int> lex_positions(const std::vector<Word>& ws) {
    std::vector<int> idx(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return ws[a] < ws[b]; });
    std::vector<int> pos(ws.size());
    for (std::size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    return pos;
}

bool PrefixExchange::is_cyclic() const {
    const int l = static_cast<int>(domain.size());
    if (l == 0) return false;
    auto dp = lex_positions(domain), rp = lex_positions(range);
    std::vector<int> f(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) f[dp[i]] = rp[bijection[i]];
    for (int k = 0; k < l; ++k)
        if (f[k] != (f[0] + k) % l) return false;
    return true;
}

Rooted from_prefix_exchange(const PrefixExchange& pe) {
    const int n = pe.n, r = pe.r;
    if (r < 1) throw Error(Errc::InvalidInput, "prefix exchange needs r >= 1");
    if (pe.domain.size() != pe.range.size() || pe.bijection.size() != pe.domain.size())
        throw Error(Errc::InvalidInput, "domain, range and bijection sizes differ");
    if (!is_complete_antichain(pe.domain, n, r) || !is_complete_antichain(pe.range, n, r))
        throw Error(Errc::InvalidInput, "domain and range must be complete antichains");
    std::vector<int> perm = pe.bijection;
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) throw Error(Errc::InvalidInput, "bijection is not a permutation");

    Transducer t(n, r);
    int root = t.add_state("q0");
    int id = t.add_state("id");
    for (Letter x = 0; x < n; ++x) t.set(id, x, id, {x});
    std::map<Word, int> node{{Word{}, root}};
    std::map<Word, int> leaf;
    for (std::size_t i = 0; i < pe.domain.size(); ++i) leaf[pe.domain[i]] = static_cast<int>(i);
    std::vector<Word> work{Word{}};
    while (!work.empty()) {
        Word p = work.back();
        work.pop_back();
        int self = node.at(p);
        Letter lo = p.empty() ? n : 0, hi = p.empty() ? n + r : n;
        for (Letter c = lo; c < hi; ++c) {
            Word child = p;
            child.push_back(c);
            auto lf = leaf.find(child);
            if (lf != leaf.end()) {
                t.set(self, c, id, pe.range[pe.bijection[lf->second]]);
            } else {
                int s = t.add_state("n" + std::to_string(t.size()));
                node[child] = s;
                t.set(self, c, s, {});
                work.push_back(child);
            }
        }
    }
    validate(t);
    return minimize(Rooted{std::move(t), root});
}

// ---- viable combinations ----

namespace {

struct Candidate {
    Word prefix;
    int state;
    ClopenSet piece;
    Word key;  // first cone of the piece without trailing zeros: its least point
};

Word least_point_key(const ClopenSet& s) {
    Word w = s.cones().front();
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

ClopenSet piece_of(const std::vector<ClopenSet>& im, const Word& rho, int p) {
    return im[p].prefixed(rho, 0);
}

void all_words(int n, int maxLen, std::vector<Word>& out) {
    out.push_back(Word{});
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) == maxLen) continue;
        for (Letter x = 0; x < n; ++x) {
            Word w = out[i];
            w.push_back(x);
            out.push_back(std::move(w));
        }
    }
}

struct ViableSearch {
    const std::vector<Candidate>& cands;
    std::map<Word, std::vector<std::size_t>> byKey;
    std::size_t target;
    std::size_t limit;
    std::vector<std::size_t> chosen;
    std::vector<ViableCombination>& out;

    void run(const ClopenSet& uncovered) {
        if (out.size() >= limit) return;
        if (uncovered.empty()) {
            if (chosen.size() == target) {
                ViableCombination v;
                for (std::size_t c : chosen) {
                    v.prefixes.push_back(cands[c].prefix);
                    v.states.push_back(cands[c].state);
                }
                out.push_back(std::move(v));
            }
            return;
        }
        if (chosen.size() >= target) return;
        auto it = byKey.find(least_point_key(uncovered));
        if (it == byKey.end()) return;
        for (std::size_t c : it->second) {
            if (!cands[c].piece.subset_of(uncovered)) continue;
            chosen.push_back(c);
            run(uncovered.intersect(cands[c].piece.complement()));
            chosen.pop_back();
            if (out.size() >= limit) return;
        }
    }
};

}  // namespace

bool is_viable(const Transducer& g, const ViableCombination& v) {
    if (v.prefixes.empty() || v.prefixes.size() != v.states.size()) return false;
    auto im = images(g);
    ClopenSet acc(g.n, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.states[i] < 0 || v.states[i] >= g.size()) return false;
        ClopenSet pc = piece_of(im, v.prefixes[i], v.states[i]);
        if (!pc.disjoint(acc)) return false;
        acc = acc.unite(pc);
    }
    return acc.is_whole();
}

std::vector<ViableCombination> viable_combinations(const Transducer& g, int maxPrefixDepth, int maxSize,
                                                   std::size_t limit) {
    if (g.r != 0) throw Error(Errc::InvalidInput, "viable combinations need a machine over X_n");
    if (maxSize < 0) maxSize = 3 * (g.n - 1) + 1;
    auto im = images(g);
    std::vector<Word> prefixes;
    all_words(g.n, maxPrefixDepth, prefixes);
    std::sort(prefixes.begin(), prefixes.end());
    std::vector<Candidate> cands;
    for (const Word& rho : prefixes)
        for (int p = 0; p < g.size(); ++p) {
            ClopenSet pc = piece_of(im, rho, p);
            Word key = least_point_key(pc);
            cands.push_back(Candidate{rho, p, std::move(pc), std::move(key)});
        }
    std::vector<ViableCombination> out;
    for (int size = 1; size <= maxSize && out.size() < limit; ++size) {
        ViableSearch vs{cands, {}, static_cast<std::size_t>(size), limit, {}, out};
        for (std::size_t c = 0; c < cands.size(); ++c) vs.byKey[cands[c].key].push_back(c);
        vs.run(ClopenSet::whole(g.n, 0));
    }
    return out;
}

ViableCombination expand_viable(const Transducer& g, const ViableCombination& v, std::size_t i) {
    if (i >= v.size()) throw Error(Errc::InvalidInput, "expansion index out of range");
    ViableCombination res;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != i) {
            res.prefixes.push_back(v.prefixes[k]);
            res.states.push_back(v.states[k]);
            continue;
        }
        for (Letter l = 0; l < g.n; ++l) {
            res.prefixes.push_back(concat(v.prefixes[k], g.out[v.states[k]][l]));
            res.states.push_back(g.next[v.states[k]][l]);
        }
    }
    return res;
}

ViableCombination reorder_lexicographic(const Transducer& g, const ViableCombination& v) {
    auto im = images(g);
    std::vector<std::pair<ClopenSet, std::size_t>> pieces;
    for (std::size_t i = 0; i < v.size(); ++i) pieces.emplace_back(piece_of(im, v.prefixes[i], v.states[i]), i);
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
        return a.first.cones().front() < b.first.cones().front();
    });
    ViableCombination res;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k > 0) {
            const Word& last = pieces[k - 1].first.cones().back();
            const Word& first = pieces[k].first.cones().front();
            if (comparable(last, first) || !(last < first))
                throw Error(Errc::Validation, "pieces are not totally separated; cannot reorder");
        }
        res.prefixes.push_back(v.prefixes[pieces[k].second]);
        res.states.push_back(v.states[pieces[k].second]);
    }
    return res;
}

// ---- realization over C_{n,r} ----

namespace {

Transducer core_product(const Transducer& a, const Transducer& b) {
    return core(minimize(product(Rooted{a, 0}, Rooted{b, 0})).m);
}

Rooted reflection_initial(int n, int r) {
    Transducer t(n, r);
    int root = t.add_state("q0"), s = t.add_state("s");
    for (int k = 0; k < r; ++k) t.set(root, n + k, s, {n + (r - 1 - k)});
    for (Letter x = 0; x < n; ++x) t.set(s, x, s, {n - 1 - x});
    return Rooted{std::move(t), root};
}

}  // namespace

Rooted realize_in_TBnr(const Transducer& g, int r, const RealizeOptions& opt) {
    if (g.r != 0) throw Error(Errc::InvalidInput, "realization needs a machine over X_n");
    Verdict mem = member_Onr(g, r);
    if (!mem) throw Error(Errc::InvalidInput, "element is not in O_{n,r}: " + mem.reason);
    Orientation o = orientation(g);
    if (o == Orientation::Reversing) {
        Rooted a = realize_in_TBnr(core_product(g, pi_R(g.n)), r, opt);
        return minimize(product(a, reflection_initial(g.n, r)));
    }
    auto im = images(g);
    for (int q = 0; q < g.size(); ++q)
        if (im[q].is_whole() && is_injective_state(g, q, im)) return minimize(wrap_state(g, q, r));

    auto found = viable_combinations(g, opt.maxPrefixDepth, opt.maxSize, 1);
    if (found.empty())
        throw Error(Errc::SearchExhausted,
                    "no viable combination with prefix depth <= " + std::to_string(opt.maxPrefixDepth) +
                        " and size <= " +
                        std::to_string(opt.maxSize < 0 ? 3 * (g.n - 1) + 1 : opt.maxSize));
    ViableCombination v = o == Orientation::Preserving ? reorder_lexicographic(g, found.front()) : found.front();
    const int n = g.n, j = static_cast<int>(v.size()), J = r * j;
    if (n > 2 && (J - r) % (n - 1) != 0) throw Error(Errc::Internal, "antichain sizes are incongruent");

    // Complete antichain of C_{n,r} with J elements, in lexicographic order.
    std::vector<Word> domain;
    for (int k = 0; k < r; ++k) domain.push_back(Word{n + k});
    while (static_cast<int>(domain.size()) < J) {
        Word last = domain.back();
        domain.pop_back();
        for (Letter x = 0; x < n; ++x) {
            Word w = last;
            w.push_back(x);
            domain.push_back(std::move(w));
        }
    }
    if (static_cast<int>(domain.size()) != J) throw Error(Errc::Internal, "antichain size mismatch");

    Transducer t = lift(g, r);
    int root = t.add_state("q0");
    std::map<Word, int> node{{Word{}, root}};
    for (int idx = 0; idx < J; ++idx) {
        const Word& u = domain[idx];
        int at = root;
        for (std::size_t len = 1; len < u.size(); ++len) {
            Word p(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(len));
            auto it = node.find(p);
            if (it == node.end()) {
                int s = t.add_state("n" + std::to_string(t.size()));
                t.set(at, p.back(), s, {});
                it = node.emplace(p, s).first;
            }
            at = it->second;
        }
        int tIdx = idx / j, iIdx = idx % j;
        t.set(at, u.back(), v.states[iIdx], concat(Word{n + tIdx}, v.prefixes[iIdx]));
    }
    validate(t);
    return minimize(Rooted{std::move(t), root});
}

}  // namespace tx
