#include "doctest.h"
#include "oracle.hpp"
#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/image.hpp"
#include "tx/pool.hpp"

using namespace tx;

namespace {

ClopenSet cs(int n, std::vector<Word> cones, int r = 0) { return canonicalize_clopen(n, r, std::move(cones)); }

std::vector<Transducer> pool_machines() {
    std::vector<Transducer> res;
    for (int n : {3, 4})
        for (const auto& e : product_pool(base_pool(n), 2, false)) res.push_back(e.elem.machine());
    return res;
}

}  // namespace

TEST_CASE("image examples") {
    Transducer g = example_g();
    CHECK(image(g, g.find_state("a")) == cs(4, {{0}, {1}}));
    CHECK(image(g, g.find_state("b")) == cs(4, {{2}, {3}}));
    CHECK(image(identity(3), 0).is_whole());
    Transducer o = oplus(2, permutation({1, 0}), 4);
    CHECK(image(o, o.find_state("q(1)")) == cs(4, {{2}, {3}}));
}

TEST_CASE("m_of_state examples") {
    Transducer g = example_g();
    CHECK(m_of_state(g, 0) == 2);
    CHECK(m_of_state(g, 1) == 2);
    CHECK(m_of_state(identity(4), 0) == 1);
    Transducer o = oplus(3, identity(3), 6);
    CHECK(m_of_state(o, 0) == 3);
}

TEST_CASE("injectivity and homeomorphism states") {
    Transducer g = example_g();
    CHECK(is_injective_state(g, 0));
    Transducer constant(2);
    constant.add_state("z");
    constant.set(0, 0, 0, {0});
    constant.set(0, 1, 0, {0});
    CHECK_FALSE(is_injective_state(constant, 0));
    CHECK_THROWS_AS(images(constant), Error);
    Transducer T = example_T(3);
    CHECK(is_injective_state(T, T.find_state("b")));
    CHECK(is_homeomorphism_state(T, T.find_state("a")));
    CHECK(is_homeomorphism_state(T, T.find_state("b")));
    CHECK_FALSE(is_homeomorphism_state(T, T.find_state("c")));
    CHECK_FALSE(is_homeomorphism_state(g, 0));
    CHECK(is_homeomorphism_state(identity(3), 0));
    // Two letters onto the same cone.
    Transducer fold(2);
    fold.add_state("f");
    fold.set(0, 0, 0, {0});
    fold.set(0, 1, 0, {0, 1});
    try {
        images(fold);
        FAIL("image of the fold is not clopen");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotClopen);
    }
}

TEST_CASE("orientation examples") {
    CHECK(orientation(example_g()) == Orientation::Preserving);
    CHECK(orientation(pi_R(4)) == Orientation::Reversing);
    CHECK(orientation(identity(3)) == Orientation::Preserving);
    CHECK(orientation(example_T(3)) == Orientation::Preserving);
    CHECK(orientation(permutation({1, 0, 2})) == Orientation::Neither);
}

TEST_CASE("image fixpoint certificate and sampling soundness") {
    std::mt19937 rng(43);
    for (const auto& t : pool_machines()) {
        auto im = images(t);
        for (int q = 0; q < t.size(); ++q) {
            ClopenSet u(t.n);
            for (Letter x = 0; x < t.n; ++x) u = u.unite(im[t.next[q][x]].prefixed(t.out[q][x], 0));
            CHECK(u == im[q]);
            std::uniform_int_distribution<int> let(0, t.n - 1);
            for (int s = 0; s < 200; ++s) {
                Word d;
                for (int i = 0; i < 12; ++i) d.push_back(let(rng));
                CHECK(im[q].meets_cone(oracle::out(t, q, d)));
            }
        }
    }
}

TEST_CASE("orientation soundness by brute force") {
    for (const auto& t : pool_machines()) {
        if (t.n != 3) continue;
        Orientation o = orientation(t);
        if (o == Orientation::Neither) continue;
        auto words = oracle::words_of_length(t.n, 6);
        for (int q = 0; q < t.size(); ++q)
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); j += 13) {
                    Word a = oracle::out(t, q, words[i]), b = oracle::out(t, q, words[j]);
                    if (oracle::agree(a, b)) continue;
                    CHECK((o == Orientation::Preserving ? a < b : a > b));
                }
    }
}

TEST_CASE("m_q mod n-1 is constant on pool elements") {
    for (const auto& t : pool_machines()) {
        auto rep = analyze(t);
        for (const auto& s : rep) {
            CHECK(s.injective);
            CHECK((s.m - rep[0].m) % (t.n - 1) == 0);
        }
    }
}

TEST_CASE("images of an initial transducer live in C_{n,r}") {
    Rooted a = realize_in_TBnr(example_g(), 3);
    auto im = images(a.m);
    CHECK(im[a.root].is_whole());
    CHECK(im[a.root].r() == 3);
    CHECK(is_homeomorphism_state(a.m, a.root));
}
