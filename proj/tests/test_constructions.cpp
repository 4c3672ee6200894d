#include "doctest.h"
#include "oracle.hpp"
#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/group.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/signature.hpp"
#include "tx/sync.hpp"

using namespace tx;

namespace {

std::vector<Transducer> element_pool() {
    std::vector<Transducer> res{example_g()};
    for (int n : {3, 4, 5}) {
        res.push_back(identity(n));
        res.push_back(pi_R(n));
        res.push_back(example_T(n));
        res.push_back(example_U(n));
    }
    res.push_back(oplus(2, permutation({1, 0}), 4));
    res.push_back(oplus(3, permutation({1, 2, 0}), 6));
    return res;
}

bool same_core(const Rooted& a, const Transducer& g) {
    return same_table(canonical_core_form(core(a.m)), canonical_core_form(g));
}

}  // namespace

TEST_CASE("example machines") {
    Transducer p = pi_R(4);
    CHECK(evaluate(p, 0, {0, 3}).first == Word{3, 0});
    CHECK(is_identity(group_product(GroupElement(p), GroupElement(p))));
    CHECK(orientation(p) == Orientation::Reversing);
    Transducer g = example_g();
    CHECK(evaluate(g, g.find_state("a"), {3}) == std::pair<Word, int>{{1}, g.find_state("b")});
    CHECK(signature(g).sig == 8);
    CHECK(order(GroupElement(g), 4).order == 2);
    Transducer T = example_T(3);
    CHECK(evaluate(T, T.find_state("a"), {2}) == std::pair<Word, int>{{2, 2}, T.find_state("b")});
    CHECK(is_homeomorphism_state(T, T.find_state("a")));
    CHECK(bool(member_TOnr(example_U(3), 1)));
    for (const auto& t : element_pool()) CHECK(validate_On(t).value);
}

TEST_CASE("the generic middle letter expands to every letter between 0 and n-1") {
    Transducer T = example_T(5);
    int a = T.find_state("a");
    for (Letter x = 1; x <= 3; ++x) CHECK(evaluate(T, a, {x}) == std::pair<Word, int>{{4, x}, a});
    Transducer U = example_U(5);
    int q = U.find_state("q"), pp = U.find_state("p");
    for (Letter x = 1; x <= 3; ++x) CHECK(evaluate(U, q, {x}) == std::pair<Word, int>{{4, x}, pp});
}

TEST_CASE("two-letter restrictions A and B") {
    for (int n : {3, 4}) {
        std::pair<Transducer, Transducer> subs[] = {{example_A(n), example_T(n)}, {example_B(n), example_U(n)}};
        for (const auto& [A, full] : subs) {
            CHECK(A.n == 2);
            REQUIRE(A.size() == full.size());
            auto code = [&](Letter x) { return x == 0 ? 0 : n - 1; };
            for (int q = 0; q < A.size(); ++q) {
                CHECK(A.names[q] == full.names[q]);
                for (Letter x = 0; x < 2; ++x) {
                    CHECK(A.next[q][x] == full.next[q][code(x)]);
                    Word w;
                    for (Letter y : A.out[q][x]) w.push_back(code(y));
                    CHECK(w == full.out[q][code(x)]);
                }
            }
            CHECK(validate_On(core(A)).value);
        }
    }
}

TEST_CASE("H_d and oplus") {
    CHECK(is_Hd(permutation({1, 0})));
    CHECK(is_Hd(identity(3)));
    CHECK_FALSE(is_Hd(example_T(3)));
    Transducer o = oplus(2, permutation({1, 0}), 4);
    int q0 = o.find_state("q(0)"), q1 = o.find_state("q(1)");
    CHECK(evaluate(o, q0, {2}) == std::pair<Word, int>{{0}, q1});
    CHECK(evaluate(o, q0, {0}) == std::pair<Word, int>{{1}, q0});
    CHECK(rsig(o) == 2);
    Transducer o3 = oplus(3, identity(3), 6);
    CHECK(validate_On(o3).value);
    CHECK(is_bisynchronizing(realize_in_TBnr(o3, 5)).value);
    CHECK_THROWS_AS(oplus(4, identity(4), 6), Error);
    CHECK_THROWS_AS(oplus(2, example_T(3), 4), Error);
}

TEST_CASE("oplus structure") {
    // d = 3: s fixes, t swaps 0 and 1; the target depends only on whether the letter is 2.
    Transducer h(3);
    h.add_state("s");
    h.add_state("t");
    for (Letter x = 0; x < 3; ++x) {
        h.set(0, x, x == 2 ? 1 : 0, {x});
        h.set(1, x, x == 2 ? 1 : 0, {x == 2 ? 2 : 1 - x});
    }
    REQUIRE(is_Hd(h));
    REQUIRE(validate_On(h).value);
    for (int n : {6, 9}) {
        const int d = 3, m = n / d, Q = h.size();
        Transducer o = oplus(d, h, n);
        CHECK(validate_On(o).value);
        CHECK(rsig(o) == residue(d, n));
        auto im = images(o);
        for (int i = 0; i < m; ++i)
            for (int q = 0; q < Q; ++q) {
                int self = i * Q + q;
                for (int j = 0; j < m; ++j)
                    for (Letter b = 0; b < d; ++b) {
                        auto [w, to] = evaluate(o, self, {d * j + b});
                        if (j == i) {
                            CHECK(w == Word{d * i + h.out[q][b][0]});
                            CHECK(to == i * Q + h.next[q][b]);
                        } else {
                            CHECK(w == Word{d * i + b});
                            CHECK(to / Q == j);
                        }
                    }
                std::vector<Word> cones;
                for (Letter b = 0; b < d; ++b) cones.push_back({d * i + b});
                CHECK(im[self] == canonicalize_clopen(n, 0, cones));
            }
    }
}

TEST_CASE("prefix exchanges") {
    std::vector<Word> dom{{2, 0}, {2, 1}};
    PrefixExchange id{2, 1, dom, dom, {0, 1}};
    CHECK(same_machine(from_prefix_exchange(id), minimize(identity_initial(2, 1))));
    CHECK(id.is_cyclic());
    PrefixExchange x0{2, 1, {{2, 0}, {2, 1, 0}, {2, 1, 1}}, {{2, 0, 0}, {2, 0, 1}, {2, 1}}, {0, 1, 2}};
    Rooted m = from_prefix_exchange(x0);
    CHECK(same_table(core(m.m), identity(2)));
    CHECK(x0.is_cyclic());
    CHECK(evaluate(m.m, m.root, {2, 1, 0, 1, 1}).first == Word{2, 0, 1, 1, 1});
    PrefixExchange rot{3, 1, {{3, 0}, {3, 1}, {3, 2}}, {{3, 0}, {3, 1}, {3, 2}}, {1, 2, 0}};
    CHECK(rot.is_cyclic());
    PrefixExchange sw{3, 1, {{3, 0}, {3, 1}, {3, 2}}, {{3, 0}, {3, 1}, {3, 2}}, {1, 0, 2}};
    CHECK_FALSE(sw.is_cyclic());
    PrefixExchange bad{2, 1, {{2, 0}}, {{2}}, {0}};
    CHECK_THROWS_AS(from_prefix_exchange(bad), Error);
}

TEST_CASE("viable combination examples") {
    auto vid = viable_combinations(identity(3), 3, 1);
    REQUIRE(!vid.empty());
    CHECK(vid[0] == ViableCombination{{{}}, {0}});
    Transducer g = example_g();
    auto vg = viable_combinations(g, 3, 2);
    REQUIRE(!vg.empty());
    CHECK(vg[0] == ViableCombination{{{}, {}}, {g.find_state("a"), g.find_state("b")}});
    ViableCombination e = expand_viable(identity(3), vid[0], 0);
    CHECK(e == ViableCombination{{{0}, {1}, {2}}, {0, 0, 0}});
}

TEST_CASE("viable combinations are exact tilings and expansion preserves them") {
    for (const auto& g : element_pool()) {
        auto vs = viable_combinations(g, 2, -1, 16);
        CHECK(!vs.empty());
        for (const auto& v : vs) {
            CHECK(is_viable(g, v));
            ViableCombination e = expand_viable(g, v, v.size() - 1);
            CHECK(is_viable(g, e));
            CHECK(e.size() == v.size() + static_cast<std::size_t>(g.n) - 1);
            if (orientation(g) == Orientation::Preserving) CHECK(is_viable(g, reorder_lexicographic(g, v)));
        }
    }
}

TEST_CASE("realize_in_TBnr examples") {
    for (int n : {3, 4})
        for (int r = 1; r < n; ++r) {
            Rooted a = realize_in_TBnr(identity(n), r);
            CHECK(same_table(core(a.m), identity(n)));
        }
    Rooted a = realize_in_TBnr(example_g(), 3);
    CHECK(same_core(a, example_g()));
    CHECK(is_bisynchronizing(a).value);
    CHECK(orientation(core(a.m)) == Orientation::Preserving);
    Transducer T = example_T(3);
    Rooted t = realize_in_TBnr(T, 1);
    CHECK(same_machine(t, minimize(wrap_state(T, T.find_state("a"), 1))));
    CHECK_THROWS_AS(realize_in_TBnr(example_g(), 1), Error);
}

TEST_CASE("realizations over the pool") {
    for (const auto& g : element_pool())
        for (int r = 1; r < g.n; ++r) {
            if (!member_Onr(g, r)) {
                CHECK_THROWS_AS(realize_in_TBnr(g, r), Error);
                continue;
            }
            Rooted a = realize_in_TBnr(g, r);
            CHECK(a.m.r == r);
            CHECK(same_core(a, g));
            CHECK(is_bisynchronizing(a).value);
            // Induces a homeomorphism of C_{n,r}.
            CHECK(is_homeomorphism_state(a.m, a.root));
        }
}

TEST_CASE("realizations of products of non-homeomorphism elements") {
    GroupElement g(example_g());
    GroupElement T(example_T(4));
    for (const auto& e : {group_product(g, T), group_product(T, g), group_product(group_product(T, g), T)}) {
        const Transducer& m = e.machine();
        for (int r = 1; r < 4; ++r) {
            if (!member_Onr(m, r)) continue;
            Rooted a = realize_in_TBnr(m, r);
            CHECK(same_core(a, m));
            CHECK(is_bisynchronizing(a).value);
        }
    }
}
