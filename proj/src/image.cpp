#include "tx/image.hpp"

#include <deque>

#include "tx/error.hpp"

namespace tx {

namespace {

// Root counts of the output space of each state: r while the dotted root is
// still owed, 0 afterwards.
std::vector<int> output_space(const Transducer& t) {
    std::vector<int> space(static_cast<std::size_t>(t.size()), 0);
    int root = t.dotted_root();
    if (root == kNone) return space;
    std::deque<int> work{root};
    space[root] = t.r;
    while (!work.empty()) {
        int q = work.front();
        work.pop_front();
        for (Letter a = 0; a < t.letters(); ++a) {
            int to = t.next[q][a];
            if (to != kNone && t.out[q][a].empty() && space[to] == 0) {
                space[to] = t.r;
                work.push_back(to);
            }
        }
    }
    return space;
}

ClopenSet piece(const Transducer& t, const std::vector<ClopenSet>& im, const std::vector<int>& space,
                int q, Letter a) {
    return im[t.next[q][a]].prefixed(t.out[q][a], space[q]);
}

}  // namespace

std::vector<ClopenSet> images(const Transducer& t, int cap) {
    if (cap == kAutoImageIterations) cap = std::max(kDefaultImageIterations, 4 * t.size());
    std::vector<int> space = output_space(t);
    std::vector<ClopenSet> cur;
    for (int q = 0; q < t.size(); ++q) cur.push_back(ClopenSet::whole(t.n, space[q]));
    for (int it = 0; it < cap; ++it) {
        std::vector<ClopenSet> nxt;
        nxt.reserve(cur.size());
        for (int q = 0; q < t.size(); ++q) {
            ClopenSet acc(t.n, space[q]);
            for (Letter a = 0; a < t.letters(); ++a)
                if (t.next[q][a] != kNone) acc = acc.unite(piece(t, cur, space, q, a));
            if (acc.size() > static_cast<std::size_t>(kMaxImageCones))
                throw Error(Errc::NotClopen, "state image approximant exceeded " + std::to_string(kMaxImageCones) +
                                                 " cones");
            nxt.push_back(std::move(acc));
        }
        if (nxt == cur) return cur;
        cur.swap(nxt);
    }
    throw Error(Errc::NotClopen,
                "state images did not stabilise within " + std::to_string(cap) + " iterations");
}

ClopenSet image(const Transducer& t, int q, int cap) { return images(t, cap)[q]; }

int m_of_state(const Transducer& t, int q) { return static_cast<int>(image(t, q).size()); }

bool is_injective_state(const Transducer& t, int q, const std::vector<ClopenSet>& im) {
    std::vector<int> space = output_space(t);
    std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
    std::deque<int> work{q};
    seen[q] = 1;
    while (!work.empty()) {
        int p = work.front();
        work.pop_front();
        std::vector<ClopenSet> pieces;
        for (Letter a = 0; a < t.letters(); ++a) {
            if (t.next[p][a] == kNone) continue;
            ClopenSet pc = piece(t, im, space, p, a);
            for (const auto& other : pieces)
                if (!pc.disjoint(other)) return false;
            pieces.push_back(std::move(pc));
            int to = t.next[p][a];
            if (!seen[to]) {
                seen[to] = 1;
                work.push_back(to);
            }
        }
    }
    return true;
}

bool is_injective_state(const Transducer& t, int q) {
    // Two letters with equal output and target collide without any image work.
    std::vector<char> seen(static_cast<std::size_t>(t.size()), 0);
    std::deque<int> work{q};
    seen[q] = 1;
    while (!work.empty()) {
        int p = work.front();
        work.pop_front();
        for (Letter a = 0; a < t.letters(); ++a) {
            if (t.next[p][a] == kNone) continue;
            for (Letter b = 0; b < a; ++b)
                if (t.next[p][b] == t.next[p][a] && t.out[p][b] == t.out[p][a]) return false;
            if (!seen[t.next[p][a]]) {
                seen[t.next[p][a]] = 1;
                work.push_back(t.next[p][a]);
            }
        }
    }
    return is_injective_state(t, q, images(t));
}

bool is_homeomorphism_state(const Transducer& t, int q) {
    auto im = images(t);
    return im[q].is_whole() && is_injective_state(t, q, im);
}

std::vector<StateReport> analyze(const Transducer& t) {
    auto im = images(t);
    std::vector<StateReport> rep;
    for (int q = 0; q < t.size(); ++q) {
        StateReport s{t.names[q], im[q], static_cast<int>(im[q].size()), false, false};
        s.injective = is_injective_state(t, q, im);
        s.homeomorphism = s.injective && im[q].is_whole();
        rep.push_back(std::move(s));
    }
    return rep;
}

const char* orientation_name(Orientation o) {
    switch (o) {
        case Orientation::Preserving: return "Preserving";
        case Orientation::Reversing: return "Reversing";
        case Orientation::Neither: return "Neither";
    }
    return "Neither";
}

Orientation orientation(const Transducer& t) {
    if (t.r != 0) throw Error(Errc::InvalidInput, "orientation is defined for machines over X_n");
    std::vector<ClopenSet> im;
    try {
        im = images(t);
    } catch (const Error& e) {
        if (e.code() == Errc::NotClopen) return Orientation::Neither;
        throw;
    }
    for (int q = 0; q < t.size(); ++q)
        if (!is_injective_state(t, q, im)) return Orientation::Neither;
    bool preserving = true, reversing = true;
    for (int p = 0; p < t.size(); ++p)
        for (Letter x = 0; x < t.n; ++x)
            for (Letter y = x + 1; y < t.n; ++y) {
                auto hi = evaluate_periodic(t, p, EvPeriodicWord::make({x}, {t.n - 1}));
                auto lo = evaluate_periodic(t, p, EvPeriodicWord::make({y}, {0}));
                Order o = lex_compare_evp(hi, lo);
                if (o == Order::Greater) preserving = false;
                if (o == Order::Less) reversing = false;
            }
    if (preserving) return Orientation::Preserving;
    if (reversing) return Orientation::Reversing;
    return Orientation::Neither;
}

}  // namespace tx
