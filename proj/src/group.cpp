#include "tx/group.hpp"

#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/inverse.hpp"
#include "tx/sync.hpp"

namespace tx {

Transducer canonical_core_form(const Transducer& t) {
    Transducer best;
    bool have = false;
    for (int q = 0; q < t.size(); ++q) {
        Rooted b = bfs_numbering(Rooted{t, q});
        if (b.m.size() != t.size())
            throw Error(Errc::Validation, "machine is not strongly connected");
        if (!have || std::tie(b.m.next, b.m.out) < std::tie(best.next, best.out)) {
            best = std::move(b.m);
            have = true;
        }
    }
    return best;
}

GroupElement::GroupElement(const Transducer& t) {
    validate(t);
    if (t.r != 0) throw Error(Errc::InvalidInput, "group elements live over X_n");
    if (!is_synchronizing(t)) throw Error(Errc::Validation, "not synchronizing");
    Transducer c = core(minimize_rooted(core(t), 0).m);
    Verdict v = validate_On(c);
    if (!v) throw Error(Errc::Validation, v.reason);
    m_ = canonical_core_form(c);
    sig_ = tx::signature(m_);
    orient_ = tx::orientation(m_);
}

GroupElement::GroupElement(Trusted, Transducer t) : m_(canonical_core_form(t)) {
    try {
        sig_ = tx::signature(m_);
        orient_ = tx::orientation(m_);
    } catch (const Error& e) {
        throw Error(Errc::Internal, std::string("product left O_n: ") + e.what());
    }
}

GroupElement identity_element(int n) { return GroupElement(GroupElement::Trusted{}, identity(n)); }

GroupElement group_product(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n()) throw Error(Errc::InvalidInput, "elements over different alphabets");
    Rooted p = minimize(product(Rooted{g.m_, 0}, Rooted{h.m_, 0}));
    return GroupElement(GroupElement::Trusted{}, core(p.m));
}

GroupElement group_inverse(const GroupElement& g) {
    return GroupElement(GroupElement::Trusted{}, invert_core(g.m_));
}

bool is_identity(const GroupElement& g) {
    return g.machine().size() == 1 && same_table(g.machine(), identity(g.n()));
}

bool equal(const GroupElement& g, const GroupElement& h) {
    if (same_table(g.machine(), h.machine())) return true;
    if (g.n() != h.n()) return false;
    return is_identity(group_product(g, group_inverse(h)));
}

OrderResult order(const GroupElement& g, int bound, int stateCap) {
    OrderResult res;
    GroupElement p = g;
    for (int k = 1; k <= bound; ++k) {
        res.stateCounts.push_back(p.machine().size());
        if (is_identity(p)) {
            res.finite = true;
            res.order = k;
            return res;
        }
        if (k == bound) break;
        p = group_product(p, g);
        if (p.machine().size() > stateCap) {
            res.stateCounts.push_back(p.machine().size());
            break;
        }
    }
    return res;
}

RotationClass rotation_action(const GroupElement& g, const RotationClass& c) {
    const Transducer& m = g.machine();
    check_word(c.rep, m.n);
    int loop = kNone;
    for (int q = 0; q < m.size(); ++q)
        if (evaluate(m, q, c.rep).second == q) {
            if (loop != kNone) throw Error(Errc::Internal, "loop state is not unique");
            loop = q;
        }
    if (loop == kNone) throw Error(Errc::Internal, "no loop state for the class");
    Word w = evaluate(m, loop, c.rep).first;
    if (w.empty()) throw Error(Errc::Internal, "loop with empty output");
    return rotation_class_of(w);
}

std::vector<int> orbit_lengths(const GroupElement& g, const RotationClass& c, int steps) {
    std::vector<int> lens{static_cast<int>(c.rep.size())};
    RotationClass cur = c;
    for (int i = 0; i < steps; ++i) {
        cur = rotation_action(g, cur);
        lens.push_back(static_cast<int>(cur.rep.size()));
    }
    return lens;
}

GroupWord inverse_word(const GroupWord& w) {
    GroupWord res(w.rbegin(), w.rend());
    for (auto& [name, e] : res) e = -e;
    return res;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    GroupWord res = inverse_word(a);
    GroupWord bi = inverse_word(b);
    res.insert(res.end(), bi.begin(), bi.end());
    res.insert(res.end(), a.begin(), a.end());
    res.insert(res.end(), b.begin(), b.end());
    return res;
}

GroupElement evaluate_group_word(const std::map<std::string, GroupElement>& gens, const GroupWord& word) {
    if (gens.empty()) throw Error(Errc::InvalidInput, "no generators");
    std::map<std::string, GroupElement> inverses;
    GroupElement acc = identity_element(gens.begin()->second.n());
    for (const auto& [name, e] : word) {
        auto it = gens.find(name);
        if (it == gens.end()) throw Error(Errc::InvalidInput, "unknown generator " + name);
        if (e == 1) {
            acc = group_product(acc, it->second);
        } else if (e == -1) {
            auto inv = inverses.find(name);
            if (inv == inverses.end()) inv = inverses.emplace(name, group_inverse(it->second)).first;
            acc = group_product(acc, inv->second);
        } else {
            throw Error(Errc::InvalidInput, "exponent must be +1 or -1");
        }
    }
    return acc;
}

bool verify_relation(const std::map<std::string, GroupElement>& gens, const GroupWord& word) {
    return is_identity(evaluate_group_word(gens, word));
}

ZeroFixing zero_fixing_check(const GroupElement& g) {
    if (g.orientation() == Orientation::Neither)
        throw Error(Errc::InvalidInput, "element neither preserves nor reverses the order");
    const int N = g.n() - 1;
    RotationClass z = rotation_action(g, RotationClass{{0}});
    RotationClass t = rotation_action(g, RotationClass{{N}});
    if (z.rep == Word{0} && t.rep == Word{N}) return ZeroFixing::FixesBoth;
    if (z.rep == Word{N} && t.rep == Word{0}) return ZeroFixing::Swaps;
    throw Error(Errc::Internal, "0 and n-1 are neither fixed nor swapped");
}

}  // namespace tx
