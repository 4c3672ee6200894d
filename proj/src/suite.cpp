#include "tx/suite.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/group.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/pool.hpp"
#include "tx/signature.hpp"
#include "tx/sync.hpp"
#include "tx/textio.hpp"

namespace tx {

namespace {

// Collects failures; empty text means the item passed.
struct Check {
    std::ostringstream os;
    void expect(bool ok, const std::string& what) {
        if (!ok) os << (os.tellp() > 0 ? "; " : "") << what;
    }
    std::string str() const { return os.str(); }
};

std::vector<Word> words_upto(int n, int len) {
    std::vector<Word> all{{}};
    std::vector<Word> level{{}};
    for (int l = 1; l <= len; ++l) {
        std::vector<Word> nxt;
        for (const auto& w : level)
            for (Letter a = 0; a < n; ++a) {
                Word v = w;
                v.push_back(a);
                nxt.push_back(std::move(v));
            }
        all.insert(all.end(), nxt.begin(), nxt.end());
        level = std::move(nxt);
    }
    return all;
}

Word padded(Word w, int pad) {
    w.insert(w.end(), static_cast<std::size_t>(pad), 0);
    return w;
}

std::string g_suite() {
    Check c;
    Transducer g = example_g();
    c.expect(minimal_sync_level(g) == 1, "sync level != 1");
    c.expect(m_of_state(g, 0) == 2 && m_of_state(g, 1) == 2, "m_a, m_b != 2");
    SignatureReport s = signature(g);
    c.expect(s.sig == 8, "sig != 8");
    c.expect(s.rsig == 2, "rsig != 2");
    for (int r = 1; r <= 3; ++r) c.expect(bool(member_TOnr(g, r)) == (r == 3), "member_TOnr(g," + std::to_string(r) + ")");
    OrderResult o = order(GroupElement(g), 8);
    c.expect(o.finite && o.order == 2, "order != 2");
    c.expect(orientation(g) == Orientation::Preserving, "orientation");
    c.expect(image(g, 0) == canonicalize_clopen(4, 0, {{0}, {1}}), "im(a)");
    c.expect(image(g, 1) == canonicalize_clopen(4, 0, {{2}, {3}}), "im(b)");
    return c.str();
}

std::string pi_identity() {
    Check c;
    for (int n = 2; n <= 7; ++n) {
        GroupElement p(pi_R(n));
        OrderResult o = order(p, 8);
        c.expect(o.finite && o.order == 2, "order(pi_R) at n=" + std::to_string(n));
        c.expect(p.rsig() == 1, "rsig(pi_R)");
        for (int r = 1; r < n; ++r) c.expect(bool(member_TOnr(pi_R(n), r)), "member_TOnr(pi_R)");
        GroupElement id = identity_element(n);
        c.expect(is_identity(id), "identity");
        c.expect(equal(group_product(id, p), p) && equal(group_product(p, id), p), "id * pi_R");
    }
    return c.str();
}

std::string f_relations(int n) {
    Check c;
    Transducer T = example_T(n), U = example_U(n);
    std::map<std::string, GroupElement> gens{{"T", GroupElement(T)}, {"U", GroupElement(U)}};
    GroupWord a{{"U", -1}, {"T", 1}};
    GroupWord b{{"T", 1}, {"U", 1}, {"T", -1}};
    GroupWord b2{{"T", 1}, {"T", 1}, {"U", 1}, {"T", -1}, {"T", -1}};
    c.expect(verify_relation(gens, commutator(a, b)), "[U^-1 T, T U T^-1] != 1");
    c.expect(verify_relation(gens, commutator(a, b2)), "[U^-1 T, T^2 U T^-2] != 1");
    c.expect(is_homeomorphism_state(T, T.find_state("a")), "T a not a homeomorphism state");
    c.expect(is_homeomorphism_state(T, T.find_state("b")), "T b not a homeomorphism state");
    c.expect(is_homeomorphism_state(U, U.find_state("p")), "U p not a homeomorphism state");
    c.expect(bool(member_TOnr(T, 1)), "T not in TO_{n,1}");
    c.expect(bool(member_TOnr(U, 1)), "U not in TO_{n,1}");
    return c.str();
}

std::string infinite_order() {
    Check c;
    GroupElement T(example_T(3));
    auto lens = orbit_lengths(T, RotationClass{{1, 2}}, 6);
    for (std::size_t i = 1; i < lens.size(); ++i) c.expect(lens[i] > lens[i - 1], "orbit lengths not increasing");
    c.expect(!order(T, 16).finite, "order(T) within 16");
    return c.str();
}

std::string oplus_suite() {
    Check c;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}, {6, 3}}) {
        std::vector<Letter> cyc(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) cyc[i] = (i + 1) % d;
        Transducer t = oplus(d, permutation(cyc), n);
        std::string tag = " (n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
        c.expect(rsig(t) == residue(d, n), "rsig != d" + tag);
        Verdict v = validate_On(t);
        c.expect(v.value, "not in O_n" + tag + ": " + v.reason);
        for (int i = 0; i < n / d; ++i) {
            std::vector<Word> cones;
            for (int b = 0; b < d; ++b) cones.push_back({d * i + b});
            c.expect(image(t, i) == canonicalize_clopen(n, 0, cones), "image of state " + std::to_string(i) + tag);
        }
    }
    return c.str();
}

std::string rsig_pool(int jobs) {
    Check c;
    for (int n : {3, 4}) {
        auto pool = product_pool(base_pool(n), 3, jobs > 1);
        for (const auto& r : analyze_pool(pool, jobs > 1)) {
            c.expect(r.homomorphic(), "rsig not multiplicative at " + r.name);
            c.expect(r.inverseConsistent(), "rsig of inverse mismatch at " + r.name);
            c.expect(r.mConstant, "m_q mod n-1 not constant at " + r.name);
        }
    }
    return c.str();
}

std::string partition7() {
    auto p = signature_class_partition(7, {1, 5});
    return p == std::vector<std::vector<int>>{{1, 2, 4, 5}, {3, 6}} ? "" : "partition differs";
}

std::string units_claims() {
    Check c;
    for (int m = 2; m <= 50; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j)
                if (!verify_lcm_claim(m, i, j))
                    c.expect(false, "lcm claim fails at " + std::to_string(m) + "," + std::to_string(i) + "," +
                                        std::to_string(j));
    for (int n : {4, 10, 28}) c.expect(divisors_generate_units(n), "divisors do not generate at n=" + std::to_string(n));
    return c.str();
}

std::string oracle_checks() {
    Check c;
    const int pad = 6;
    for (int n : {3, 4}) {
        auto base = base_pool(n);
        auto words = words_upto(n, 6);
        for (const auto& a : base)
            for (const auto& b : base) {
                const Transducer& A = a.elem.machine();
                const Transducer& B = b.elem.machine();
                Transducer P = product(A, B);
                for (int qa = 0; qa < A.size(); ++qa)
                    for (int qb = 0; qb < B.size(); ++qb) {
                        int pq = qa * B.size() + qb;
                        Rooted M = minimize_rooted(P, pq);
                        for (const auto& w : words) {
                            Word x = padded(w, pad);
                            Word seq = evaluate(B, qb, evaluate(A, qa, x).first).first;
                            Word viaP = evaluate(P, pq, x).first;
                            Word viaM = evaluate(M.m, M.root, x).first;
                            if (!comparable(seq, viaP) || !comparable(seq, viaM)) {
                                c.expect(false, "product/minimize disagree for " + a.name + "*" + b.name);
                                goto next_pair;
                            }
                        }
                    }
            next_pair:;
            }
        for (const auto& e : base) {
            const Transducer& g = e.elem.machine();
            auto im = images(g);
            for (int q = 0; q < g.size(); ++q) {
                Word nu = im[q].cones().front();
                Rooted inv = invert_from(g, q, nu);
                Word l0 = L(g, q, nu);
                for (const auto& w : words) {
                    Word x = padded(w, pad);
                    Word y = evaluate(g, q, x).first;
                    if (!is_prefix(nu, y)) continue;
                    Word back = evaluate(inv.m, inv.root, subtract_prefix(y, nu)).first;
                    if (!comparable(concat(l0, back), x)) {
                        c.expect(false, "inverse disagrees for " + e.name);
                        break;
                    }
                }
            }
        }
    }
    return c.str();
}

std::string membership_lattice(int jobs) {
    Check c;
    for (int n : {3, 4, 5, 6, 7}) {
        auto base = base_pool(n);
        auto pool = n <= 4 ? product_pool(base, 2, jobs > 1) : base;
        for (const auto& e : pool) {
            const Transducer& t = e.elem.machine();
            c.expect(bool(member_Onr(t, n - 1)), "member(" + e.name + ", n-1) false");
            for (int i = 1; i < n; ++i) {
                bool mi = bool(member_Onr(t, i));
                c.expect(mi == bool(member_Onr(t, std::gcd(i, n - 1))), "gcd rule fails at " + e.name);
                for (int j = 1; j < n; ++j) c.expect(membership_monotonicity_check(t, i, j), "monotonicity at " + e.name);
            }
        }
    }
    return c.str();
}

std::string round_trip() {
    Check c;
    for (int n : {3, 4})
        for (const auto& e : base_pool(n)) {
            const Transducer& t = e.elem.machine();
            ParsedMachine pm = parse_transducer(serialize(t));
            c.expect(same_table(pm.m, t) && pm.m.names == t.names, "round trip of " + e.name);
        }
    return c.str();
}

std::string realization() {
    Check c;
    for (int n : {3, 4})
        for (const auto& e : base_pool(n))
            for (int r = 1; r < n; ++r) {
                const Transducer& g = e.elem.machine();
                if (!member_Onr(g, r)) continue;
                Rooted a = realize_in_TBnr(g, r);
                c.expect(same_table(canonical_core_form(core(a.m)), g),
                         "core of realization differs for " + e.name + " r=" + std::to_string(r));
                c.expect(is_bisynchronizing(a).value, "realization not bi-synchronizing for " + e.name);
            }
    return c.str();
}

}  // namespace

std::vector<SuiteItem> suite_items(const std::string& suite) {
    std::vector<SuiteItem> items;
    auto f_items = [&] {
        for (int n : {3, 4, 5}) items.push_back({"F-relations n=" + std::to_string(n), [n] { return f_relations(n); }});
    };
    if (suite == "paper") {
        items.push_back({"g-suite n=4", g_suite});
        items.push_back({"pi_R and identity", pi_identity});
        f_items();
        items.push_back({"infinite order of T", infinite_order});
        items.push_back({"oplus_d examples", oplus_suite});
        items.push_back({"rsig homomorphism on product pool", [] { return rsig_pool(1); }});
        items.push_back({"n=7 signature partition", partition7});
        items.push_back({"units lattice claims", units_claims});
        items.push_back({"oracle equivalence", oracle_checks});
        items.push_back({"membership lattice", [] { return membership_lattice(1); }});
        items.push_back({"text round trip", round_trip});
        items.push_back({"realization in TB_{n,r}", realization});
    } else if (suite == "F-relations") {
        f_items();
    } else {
        throw Error(Errc::InvalidInput, "unknown suite '" + suite + "' (expected paper or F-relations)");
    }
    return items;
}

std::vector<SuiteResult> run_suite(const std::vector<SuiteItem>& items, int jobs) {
    if (jobs < 1) throw Error(Errc::InvalidInput, "--jobs must be at least 1");
    std::vector<SuiteResult> res(items.size());
    const long long N = static_cast<long long>(items.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (long long i = 0; i < N; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult& r = res[i];
        r.name = items[i].name;
        try {
            r.detail = items[i].check();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    return res;
}

}  // namespace tx
