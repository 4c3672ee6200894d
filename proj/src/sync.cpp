#include "tx/sync.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tx/error.hpp"

namespace tx {

Automaton automaton_of(const Transducer& t) {
    Automaton a;
    a.n = t.n;
    int root = t.dotted_root();
    std::vector<int> map(static_cast<std::size_t>(t.size()), kNone);
    for (int q = 0; q < t.size(); ++q)
        if (q != root) {
            map[q] = static_cast<int>(a.origin.size());
            a.origin.push_back(q);
        }
    for (int q : a.origin) {
        std::vector<int> row(static_cast<std::size_t>(t.n));
        for (Letter x = 0; x < t.n; ++x) row[x] = map[t.next[q][x]];
        a.next.push_back(std::move(row));
    }
    return a;
}

CollapseStep collapse(const Automaton& a) {
    CollapseStep st;
    std::map<std::vector<int>, int> ids;
    st.cls.resize(static_cast<std::size_t>(a.size()));
    std::vector<int> rep;
    for (int q = 0; q < a.size(); ++q) {
        auto [it, fresh] = ids.emplace(a.next[q], static_cast<int>(ids.size()));
        if (fresh) rep.push_back(q);
        st.cls[q] = it->second;
    }
    st.result.n = a.n;
    for (int q : rep) {
        std::vector<int> row;
        for (int to : a.next[q]) row.push_back(st.cls[to]);
        st.result.next.push_back(std::move(row));
        st.result.origin.push_back(a.origin.empty() ? q : a.origin[q]);
    }
    return st;
}

Automaton collapse(const Transducer& t) { return collapse(automaton_of(t)).result; }

bool is_synchronizing(const Automaton& a) {
    Automaton cur = a;
    for (;;) {
        if (cur.size() <= 1) return true;
        CollapseStep st = collapse(cur);
        if (st.result.size() == cur.size()) return false;
        cur = std::move(st.result);
    }
}

bool is_synchronizing(const Transducer& t) { return is_synchronizing(automaton_of(t)); }

namespace {

// Distinct images of the full state set under words of increasing length, until
// all are singletons. Returns the level and the final family.
std::pair<int, std::set<std::vector<int>>> sync_levels(const Automaton& a) {
    if (!is_synchronizing(a)) throw Error(Errc::NotSynchronizing, "transducer is not synchronizing");
    std::vector<int> all(static_cast<std::size_t>(a.size()));
    for (int q = 0; q < a.size(); ++q) all[q] = q;
    std::set<std::vector<int>> level{all};
    int k = 0;
    auto done = [&] {
        return std::all_of(level.begin(), level.end(), [](const auto& s) { return s.size() == 1; });
    };
    while (!done()) {
        std::set<std::vector<int>> nl;
        for (const auto& s : level)
            for (int x = 0; x < a.n; ++x) {
                std::vector<int> img;
                for (int q : s) img.push_back(a.next[q][x]);
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                nl.insert(std::move(img));
            }
        level.swap(nl);
        ++k;
    }
    return {k, level};
}

}  // namespace

int minimal_sync_level(const Transducer& t) { return sync_levels(automaton_of(t)).first; }

Transducer core(const Transducer& t) {
    Automaton a = automaton_of(t);
    auto [k, level] = sync_levels(a);
    std::vector<int> keep;
    for (const auto& s : level) keep.push_back(a.origin[s[0]]);
    std::sort(keep.begin(), keep.end());
    Transducer c = restrict_states(t, keep);
    if (t.r == 0) return c;
    // Drop the dotted columns: the core lives over X_n.
    Transducer x(t.n, 0);
    for (int q = 0; q < c.size(); ++q) x.add_state(c.names[q]);
    for (int q = 0; q < c.size(); ++q)
        for (Letter l = 0; l < t.n; ++l) x.set(q, l, c.next[q][l], c.out[q][l]);
    return x;
}

bool is_core(const Transducer& t) {
    if (t.r != 0 || !is_synchronizing(t)) return false;
    return core(t).size() == t.size();
}

std::vector<std::uint64_t> forced_counts(const Transducer& t, int k) {
    Automaton a = automaton_of(t);
    std::vector<std::uint64_t> cnt(static_cast<std::size_t>(a.size()), 0);
    cnt[0] = 1;
    for (int i = 0; i < k; ++i) {
        std::vector<std::uint64_t> nc(cnt.size(), 0);
        for (int q = 0; q < a.size(); ++q)
            for (int x = 0; x < a.n; ++x) nc[a.next[q][x]] += cnt[q];
        cnt.swap(nc);
    }
    std::vector<std::uint64_t> res(static_cast<std::size_t>(t.size()), 0);
    for (int q = 0; q < a.size(); ++q) res[a.origin[q]] = cnt[q];
    return res;
}

std::vector<int> forced_states(const Transducer& t, int k) {
    Automaton a = automaton_of(t);
    std::vector<int> states{0};
    for (int i = 0; i < k; ++i) {
        std::vector<int> ns;
        ns.reserve(states.size() * static_cast<std::size_t>(a.n));
        for (int q : states)
            for (int x = 0; x < a.n; ++x) ns.push_back(a.next[q][x]);
        states.swap(ns);
    }
    for (int& q : states) q = a.origin[q];
    return states;
}

}  // namespace tx
