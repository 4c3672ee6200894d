// Acceptance checks. One line per criterion: PASS/FAIL, elapsed time, limit.
// Exit status is non-zero if any criterion fails or overruns its limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/group.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/pool.hpp"
#include "tx/signature.hpp"
#include "tx/sync.hpp"

using namespace tx;

namespace {

class Failures {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && count_++ < 5) out_ << (count_ > 1 ? "; " : "") << what;
    }
    std::string str() const {
        if (count_ == 0) return {};
        std::string s = out_.str();
        if (count_ > 5) s += "; ... " + std::to_string(count_ - 5) + " more";
        return s;
    }

private:
    int count_ = 0;
    std::ostringstream out_;
};

struct Criterion {
    int id;
    std::string name;
    double limitSeconds;
    std::function<std::string()> check;
};

ClopenSet cones(int n, std::vector<Word> ws) { return canonicalize_clopen(n, 0, std::move(ws)); }

std::vector<PoolEntry> full_pool(int n) { return product_pool(base_pool(n), 3); }

std::string g_suite() {
    Failures f;
    Transducer g = example_g();
    int a = g.find_state("a"), b = g.find_state("b");
    f.expect(minimal_sync_level(g) == 1, "sync level");
    f.expect(oracle::sync_level(g, 3) == 1, "sync level (brute force)");
    f.expect(m_of_state(g, a) == 2 && m_of_state(g, b) == 2, "m_a, m_b");
    SignatureReport s = signature(g);
    f.expect(s.sig == 8, "sig = " + std::to_string(s.sig));
    f.expect(s.rsig == 2, "rsig = " + std::to_string(s.rsig));
    f.expect(!member_TOnr(g, 1) && !member_TOnr(g, 2) && bool(member_TOnr(g, 3)), "TO_{4,r} membership");
    OrderResult o = order(GroupElement(g), 8);
    f.expect(o.finite && o.order == 2, "order");
    f.expect(orientation(g) == Orientation::Preserving, "orientation");
    f.expect(image(g, a) == cones(4, {{0}, {1}}), "im(a)");
    f.expect(image(g, b) == cones(4, {{2}, {3}}), "im(b)");
    return f.str();
}

std::string pi_and_identity() {
    Failures f;
    for (int n = 2; n <= 6; ++n) {
        GroupElement p(pi_R(n));
        OrderResult o = order(p, 8);
        f.expect(o.finite && o.order == 2, "order(pi_R) n=" + std::to_string(n));
        f.expect(p.rsig() == 1, "rsig(pi_R) n=" + std::to_string(n));
        for (int r = 1; r < n; ++r) f.expect(bool(member_TOnr(pi_R(n), r)), "pi_R in TO_{n,r}");
        GroupElement id = identity_element(n);
        f.expect(is_identity(id) && id.machine().size() == 1, "identity machine");
        f.expect(equal(group_product(id, p), p) && equal(group_product(p, id), p), "id * pi_R");
    }
    for (int n : {3, 4})
        for (const auto& e : base_pool(n)) {
            GroupElement id = identity_element(n);
            f.expect(equal(group_product(id, e.elem), e.elem) && equal(group_product(e.elem, id), e.elem),
                     "identity * " + e.name);
        }
    return f.str();
}

std::string f_relations() {
    Failures f;
    for (int n : {3, 4, 5}) {
        Transducer T = example_T(n), U = example_U(n);
        std::map<std::string, GroupElement> gens{{"T", GroupElement(T)}, {"U", GroupElement(U)}};
        GroupWord a{{"U", -1}, {"T", 1}};
        GroupWord b{{"T", 1}, {"U", 1}, {"T", -1}};
        GroupWord b2{{"T", 1}, {"T", 1}, {"U", 1}, {"T", -1}, {"T", -1}};
        const std::string tag = " n=" + std::to_string(n);
        f.expect(verify_relation(gens, commutator(a, b)), "[U^-1 T, T U T^-1]" + tag);
        f.expect(verify_relation(gens, commutator(a, b2)), "[U^-1 T, T^2 U T^-2]" + tag);
        f.expect(is_homeomorphism_state(T, T.find_state("a")), "T a" + tag);
        f.expect(is_homeomorphism_state(T, T.find_state("b")), "T b" + tag);
        f.expect(is_homeomorphism_state(U, U.find_state("p")), "U p" + tag);
        f.expect(bool(member_TOnr(T, 1)), "T in TO_{n,1}" + tag);
        f.expect(bool(member_TOnr(U, 1)), "U in TO_{n,1}" + tag);
    }
    return f.str();
}

std::string infinite_order() {
    Failures f;
    GroupElement T(example_T(3));
    auto lens = orbit_lengths(T, RotationClass{{1, 2}}, 6);
    f.expect(lens.size() == 7, "orbit length count");
    for (std::size_t i = 1; i < lens.size(); ++i) f.expect(lens[i] > lens[i - 1], "orbit lengths not increasing");
    OrderResult o = order(T, 16);
    f.expect(!o.finite, "order(T) within bound 16");
    return f.str();
}

std::string oplus_suite() {
    Failures f;
    struct Case {
        int n, d;
        std::vector<Letter> perm;
    };
    for (const auto& c : {Case{4, 2, {1, 0}}, Case{6, 2, {1, 0}}, Case{6, 3, {1, 2, 0}}}) {
        const std::string tag = " (n,d)=(" + std::to_string(c.n) + "," + std::to_string(c.d) + ")";
        Transducer o = oplus(c.d, permutation(c.perm), c.n);
        f.expect(rsig(o) == residue(c.d, c.n) && residue(c.d, c.n) == c.d, "rsig" + tag);
        Verdict v = validate_On(o);
        f.expect(v.value, "not in O_n: " + v.reason + tag);
        f.expect(is_bisynchronizing(realize_in_TBnr(o, c.n - 1)).value, "realization not bi-synchronizing" + tag);
        auto im = images(o);
        for (int i = 0; i < c.n / c.d; ++i) {
            int q = o.find_state("q(" + std::to_string(i) + ")");
            std::vector<Word> ws;
            for (Letter b = 0; b < c.d; ++b) ws.push_back({c.d * i + b});
            f.expect(q >= 0 && im[q] == cones(c.n, ws), "image of q(" + std::to_string(i) + ")" + tag);
        }
    }
    return f.str();
}

std::string rsig_homomorphism() {
    Failures f;
    for (int n : {3, 4}) {
        auto pool = full_pool(n);
        for (const auto& e : pool) {
            const Transducer& t = e.elem.machine();
            int x = rsig(t);
            if (e.prefix >= 0) {
                long long expect = static_cast<long long>(pool[e.prefix].elem.rsig()) * pool[e.base].elem.rsig();
                f.expect(x == residue(expect, n), "rsig(XY) for " + e.name);
            }
            f.expect(rsig_inverse_direct(t) == rsig(invert_core(t)), "inverse rsig for " + e.name);
            for (int q = 0; q < t.size(); ++q) f.expect(residue(m_of_state(t, q), n) == x, "m_q mod n-1 for " + e.name);
        }
    }
    return f.str();
}

std::string partition7() {
    Failures f;
    using P = std::vector<std::vector<int>>;
    f.expect(signature_class_partition(7, {1, 5}) == P{{1, 2, 4, 5}, {3, 6}}, "partition");
    // Brute force from the membership rule r(sig-1) = 0 mod 6.
    for (int r = 1; r < 7; ++r)
        for (int s = 1; s < 7; ++s) {
            bool same = true;
            for (int j : {1, 5}) same = same && ((r * (j - 1)) % 6 == 0) == ((s * (j - 1)) % 6 == 0);
            bool together = (r % 3 == 0) == (s % 3 == 0);
            f.expect(same == together, "class of " + std::to_string(r) + "," + std::to_string(s));
        }
    return f.str();
}

std::string units_claims() {
    Failures f;
    for (int m = 2; m <= 50; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                f.expect(verify_lcm_claim(m, i, j), "lcm claim m=" + std::to_string(m) + " i=" + std::to_string(i) +
                                                        " j=" + std::to_string(j));
    for (int n : {4, 10, 28}) f.expect(divisors_generate_units(n), "divisors generate units n=" + std::to_string(n));
    return f.str();
}

Word padded(const Word& w) { return oracle::pad(w, 6); }

std::string oracle_equivalence() {
    Failures f;
    for (int n : {3, 4}) {
        auto base = base_pool(n);
        auto words = oracle::words_upto(n, 6);
        // product and minimize against composition of evaluations.
        for (const auto& ea : base)
            for (const auto& eb : base) {
                const Transducer &A = ea.elem.machine(), &B = eb.elem.machine();
                Transducer P = product(A, B);
                const std::string tag = ea.name + "*" + eb.name;
                for (int qa = 0; qa < A.size(); ++qa)
                    for (int qb = 0; qb < B.size(); ++qb) {
                        int qp = qa * B.size() + qb;
                        Rooted M = minimize_rooted(P, qp);
                        for (const auto& w : words) {
                            Word x = padded(w);
                            Word comp = oracle::out(B, qb, oracle::out(A, qa, x));
                            f.expect(oracle::out(P, qp, x) == comp, "product " + tag);
                            f.expect(oracle::agree(oracle::out(M.m, M.root, x), comp), "minimize " + tag);
                        }
                    }
            }
        // inversion of the realized initial machines.
        for (const auto& e : product_pool(base, 2)) {
            Rooted a = realize_in_TBnr(e.elem.machine(), n - 1);
            Rooted inv = invert_initial(a);
            Rooted ma = minimize(a);
            for (int k = 0; k < n - 1; ++k)
                for (const auto& w : words) {
                    Word x = padded(concat({n + k}, w));
                    Word y = oracle::out(a.m, a.root, x);
                    f.expect(oracle::agree(oracle::out(inv.m, inv.root, y), x), "inverse after " + e.name);
                    f.expect(oracle::agree(oracle::out(a.m, a.root, oracle::out(inv.m, inv.root, x)), x),
                             "inverse before " + e.name);
                    f.expect(oracle::agree(oracle::out(ma.m, ma.root, x), y), "minimize initial " + e.name);
                }
        }
    }
    return f.str();
}

int gcd_mod(int j, int n) { return std::gcd(j, n - 1); }

std::string membership_lattice() {
    Failures f;
    for (int n : {3, 4, 5, 7}) {
        auto pool = n <= 4 ? full_pool(n) : product_pool(base_pool(n), 2);
        for (const auto& e : pool) {
            const Transducer& t = e.elem.machine();
            std::vector<bool> mem(static_cast<std::size_t>(n), false);
            for (int r = 1; r < n; ++r) mem[r] = bool(member_Onr(t, r));
            f.expect(mem[n - 1], e.name + " not in O_{n,n-1}");
            for (int j = 1; j < n; ++j) {
                int g = gcd_mod(j, n);
                f.expect(mem[j] == mem[g], e.name + " gcd rule j=" + std::to_string(j));
                for (int i = 1; i < n; ++i) {
                    bool reach = false;
                    for (int m = 0; m < n - 1 && !reach; ++m) reach = (m * i - j) % (n - 1) == 0;
                    if (mem[i] && reach) f.expect(mem[j], e.name + " multiple rule");
                }
            }
        }
    }
    return f.str();
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "g-suite n=4", 1.0, g_suite},
        {2, "pi_R and identity", 1.0, pi_and_identity},
        {3, "F-relations n=3,4,5", 30.0, f_relations},
        {4, "infinite order of T", 10.0, infinite_order},
        {5, "oplus_d suite", 10.0, oplus_suite},
        {6, "rsig homomorphism on the product pool", 60.0, rsig_homomorphism},
        {7, "n=7 signature partition", 1.0, partition7},
        {8, "units lattice claims", 5.0, units_claims},
        {9, "oracle equivalence", 60.0, oracle_equivalence},
        {10, "membership lattice", 10.0, membership_lattice},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.check();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (detail.empty() && secs > c.limitSeconds) detail = "time limit exceeded";
        bool ok = detail.empty();
        failed += !ok;
        std::printf("%s %2d %s (%.3f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limitSeconds, ok ? "" : ": ", detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
