#include "tx/inverse.hpp"

#include <deque>
#include <map>

#include "tx/error.hpp"
#include "tx/image.hpp"
#include "tx/sync.hpp"

namespace tx {

namespace {

struct PreimageSearch {
    const Transducer& t;
    const Word& v;
    const std::vector<ClopenSet>& im;
    int depth;
    Word g;
    int found = 0;

    void run(Word& w, const Word& u, int s) {
        // Two diverging cones fix the answer; cones below g cannot shorten it.
        if (found >= 2 && is_prefix(g, w)) return;
        if (is_prefix(v, u)) {
            g = found == 0 ? w : common_prefix(g, w);
            ++found;
            return;
        }
        if (!is_prefix(u, v)) return;
        if (!im[s].meets_cone(subtract_prefix(v, u))) return;
        if (static_cast<int>(w.size()) >= depth)
            throw Error(Errc::DepthExceeded, "preimage search exceeded depth " + std::to_string(depth));
        for (Letter a = 0; a < t.letters(); ++a) {
            if (t.next[s][a] == kNone) continue;
            w.push_back(a);
            run(w, concat(u, t.out[s][a]), t.next[s][a]);
            w.pop_back();
        }
    }
};

std::string word_tag(const Word& w, int n) {
    if (w.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += w[i] >= n ? "r" + std::to_string(w[i] - n) : std::to_string(w[i]);
    }
    return s;
}

Rooted closure(const Transducer& t, const Word& w0, int q0, const std::vector<ClopenSet>& im,
               const InverseOptions& opt) {
    Transducer inv(t.n, t.r);
    int droot = t.dotted_root();
    std::map<std::pair<Word, int>, int> index;
    std::deque<std::pair<Word, int>> work;
    auto id = [&](const Word& w, int q) {
        auto [it, fresh] = index.emplace(std::make_pair(w, q), inv.size());
        if (fresh) {
            if (inv.size() >= opt.stateCap)
                throw Error(Errc::Resource, "inverse closure exceeded " +
                                                std::to_string(opt.stateCap) + " states");
            inv.add_state(word_tag(w, t.n) + "~" + t.names[q]);
            work.emplace_back(w, q);
        }
        return it->second;
    };
    id(w0, q0);
    while (!work.empty()) {
        auto [w, q] = work.front();
        work.pop_front();
        int self = index.at({w, q});
        bool dotted = t.r > 0 && w.empty() && q == droot;
        Letter lo = dotted ? t.n : 0, hi = dotted ? t.n + t.r : t.n;
        for (Letter i = lo; i < hi; ++i) {
            Word wi = w;
            wi.push_back(i);
            Word lw = L(t, q, wi, im, opt.depth);
            auto [lam, q2] = evaluate(t, q, lw);
            int to = id(subtract_prefix(wi, lam), q2);
            inv.set(self, i, to, lw);
        }
    }
    return Rooted{std::move(inv), 0};
}

}  // namespace

Word L(const Transducer& t, int q, const Word& v, const std::vector<ClopenSet>& im, int depth) {
    PreimageSearch ps{t, v, im, depth, {}, 0};
    Word w;
    ps.run(w, Word{}, q);
    if (ps.found == 0) throw Error(Errc::InvalidInput, "cone has empty preimage");
    return ps.g;
}

Word L(const Transducer& t, int q, const Word& v) { return L(t, q, v, images(t)); }

Rooted invert_initial(const Rooted& a, const InverseOptions& opt) {
    auto im = images(a.m);
    if (!im[a.root].is_whole() || !is_injective_state(a.m, a.root, im))
        throw Error(Errc::NotInvertible, "initial state is not a homeomorphism state");
    return closure(a.m, Word{}, a.root, im, opt);
}

Rooted invert_from(const Transducer& t, int q, const Word& nu, const InverseOptions& opt) {
    auto im = images(t);
    if (!im[q].contains_cone(nu))
        throw Error(Errc::InvalidInput, "cone is not inside the image of the state");
    if (!is_injective_state(t, q, im)) throw Error(Errc::NotInvertible, "state is not injective");
    Word l0 = L(t, q, nu, im, opt.depth);
    auto [lam, s] = evaluate(t, q, l0);
    return closure(t, subtract_prefix(nu, lam), s, im, opt);
}

Transducer invert_core(const Transducer& g, int root, const InverseOptions& opt) {
    if (g.r != 0) throw Error(Errc::InvalidInput, "invert_core expects a machine over X_n");
    auto im = images(g);
    Word nu = im[root].is_whole() ? Word{} : im[root].cones().front();
    Rooted inv = invert_from(g, root, nu, opt);
    Rooted m = minimize(inv);
    return core(m.m);
}

BisyncResult is_bisynchronizing(const Rooted& a, const InverseOptions& opt) {
    BisyncResult res;
    try {
        auto im = images(a.m);
        if (!im[a.root].is_whole() || !is_injective_state(a.m, a.root, im)) {
            res.reason = "initial state is not a homeomorphism state";
            return res;
        }
    } catch (const Error& e) {
        res.reason = e.what();
        return res;
    }
    res.invertible = true;
    if (!is_synchronizing(a.m)) {
        res.reason = "transducer is not synchronizing";
        return res;
    }
    try {
        Rooted inv = invert_initial(a, opt);
        if (!is_synchronizing(inv.m)) {
            res.reason = "inverse is not synchronizing";
            return res;
        }
    } catch (const Error& e) {
        res.reason = e.what();
        return res;
    }
    res.value = true;
    return res;
}

}  // namespace tx
