#include "tx/signature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "tx/error.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/sync.hpp"

namespace tx {

int residue(long long v, int n) {
    if (n <= 2) return 1;
    long long m = n - 1;
    long long x = ((v % m) + m) % m;
    return static_cast<int>(x == 0 ? m : x);
}

namespace {

void require_injective(const Transducer& t, const std::vector<ClopenSet>& im) {
    for (int q = 0; q < t.size(); ++q)
        if (!is_injective_state(t, q, im))
            throw Error(Errc::Validation, "state " + t.names[q] + " is not injective");
}

}  // namespace

SignatureReport signature(const Transducer& t) {
    if (t.r != 0) throw Error(Errc::InvalidInput, "signature needs a machine over X_n");
    if (!is_synchronizing(t)) throw Error(Errc::NotSynchronizing, "transducer is not synchronizing");
    auto im = images(t);
    require_injective(t, im);
    SignatureReport rep;
    rep.syncLevel = minimal_sync_level(t);
    std::size_t maxM = 1;
    for (const auto& c : im) maxM = std::max(maxM, c.size());
    rep.sigExact = rep.syncLevel * std::log2(static_cast<double>(t.n)) + std::log2(static_cast<double>(maxM)) < 62.0;
    if (rep.sigExact) {
        auto counts = forced_counts(t, rep.syncLevel);
        for (int q = 0; q < t.size(); ++q) rep.sig += counts[q] * im[q].size();
    }
    if (std::pow(static_cast<double>(t.n), rep.syncLevel) <= 4096.0)
        for (int q : forced_states(t, rep.syncLevel))
            rep.perWordM.push_back(static_cast<int>(im[q].size()));
    // Word counts modulo n-1, exact for any level.
    const long long mod = std::max(1, t.n - 1);
    Automaton a = automaton_of(t);
    std::vector<long long> cnt(static_cast<std::size_t>(a.size()), 0);
    cnt[0] = 1 % mod;
    for (int i = 0; i < rep.syncLevel; ++i) {
        std::vector<long long> nc(cnt.size(), 0);
        for (int q = 0; q < a.size(); ++q)
            for (int x = 0; x < a.n; ++x) nc[a.next[q][x]] = (nc[a.next[q][x]] + cnt[q]) % mod;
        cnt.swap(nc);
    }
    long long res = 0;
    for (int q = 0; q < a.size(); ++q) res = (res + cnt[q] * static_cast<long long>(im[a.origin[q]].size() % mod)) % mod;
    rep.rsig = residue(res, t.n);
    return rep;
}

int rsig(const Transducer& t) { return signature(t).rsig; }

int rsig_inverse_direct(const Transducer& t) {
    if (t.r != 0) throw Error(Errc::InvalidInput, "rsig_inverse_direct needs a machine over X_n");
    const int q = 0;
    auto im = images(t);
    if (im[q].empty()) throw Error(Errc::InvalidInput, "state has empty image");
    const Word nu = im[q].cones().front();
    const std::size_t need = nu.size();
    // Shortest j such that every input of length j from q yields >= |nu| letters.
    std::vector<std::size_t> ml(static_cast<std::size_t>(t.size()), 0);
    int j = 0;
    const int limit = static_cast<int>((need + 1) * static_cast<std::size_t>(t.size()) + 1);
    while (ml[q] < need) {
        if (++j > limit) throw Error(Errc::Degenerate, "outputs do not grow");
        std::vector<std::size_t> nm(ml.size());
        for (int s = 0; s < t.size(); ++s) {
            std::size_t best = SIZE_MAX;
            for (Letter a = 0; a < t.n; ++a)
                best = std::min(best, t.out[s][a].size() + ml[t.next[s][a]]);
            nm[s] = best;
        }
        ml.swap(nm);
    }
    const long long mod = std::max(1, t.n - 1);
    long long count = 0;
    // Every completion of a word whose output already extends nu is counted;
    // there are n^(j-d) of them, which is 1 mod n-1.
    auto walk = [&](auto&& self, const Word& u, int s, int d) -> void {
        if (is_prefix(nu, u)) {
            count = (count + 1) % mod;
            return;
        }
        if (!is_prefix(u, nu) || d == j) return;
        for (Letter a = 0; a < t.n; ++a) self(self, concat(u, t.out[s][a]), t.next[s][a], d + 1);
    };
    walk(walk, Word{}, q, 0);
    return residue(count, t.n);
}

Verdict validate_On(const Transducer& t) {
    Verdict v;
    if (t.r != 0) {
        v.reason = "machine has dotted roots";
        return v;
    }
    try {
        validate(t);
        if (!is_synchronizing(t)) {
            v.reason = "not synchronizing";
            return v;
        }
        if (!is_core(t)) {
            v.reason = "not equal to its core";
            return v;
        }
        auto im = images(t);
        for (int q = 0; q < t.size(); ++q)
            if (!is_injective_state(t, q, im)) {
                v.reason = "state " + t.names[q] + " is not injective";
                return v;
            }
        invert_core(t);
    } catch (const Error& e) {
        v.reason = e.code() == Errc::NotSynchronizing ? std::string("inverse is not synchronizing")
                                                      : std::string(e.what());
        return v;
    }
    v.value = true;
    return v;
}

static Verdict congruence(const Transducer& t, int r) {
    if (r < 1 || r > t.n - 1)
        throw Error(Errc::InvalidInput, "r must lie in 1..n-1, got " + std::to_string(r));
    Verdict v;
    long long s = signature(t).rsig;
    long long mod = std::max(1, t.n - 1);
    v.value = (static_cast<long long>(r) * (s - 1) % mod + mod) % mod == 0;
    if (!v.value) v.reason = "r(sig-1) is not divisible by n-1";
    return v;
}

Verdict member_Onr(const Transducer& t, int r) {
    if (r < 1 || r > t.n - 1)
        throw Error(Errc::InvalidInput, "r must lie in 1..n-1, got " + std::to_string(r));
    Verdict v = validate_On(t);
    if (!v) return v;
    return congruence(t, r);
}

Verdict member_TOnr(const Transducer& t, int r) {
    Verdict v = member_Onr(t, r);
    if (!v) return v;
    if (orientation(t) == Orientation::Neither) return Verdict{false, "neither preserves nor reverses the order"};
    return v;
}

std::vector<std::vector<int>> signature_class_partition(int n, const std::set<int>& S) {
    if (n < 2) throw Error(Errc::InvalidInput, "n must be at least 2");
    const int m = n - 1;
    for (int j : S)
        if (j < 1 || j > std::max(1, m) || std::gcd(j, m) != 1)
            throw Error(Errc::InvalidInput, std::to_string(j) + " is not a unit mod " + std::to_string(m));
    std::map<std::vector<bool>, std::vector<int>> classes;
    for (int r = 1; r <= std::max(1, m); ++r) {
        std::vector<bool> key;
        for (int j : S) key.push_back(m == 1 || (static_cast<long long>(r) * (j - 1)) % m == 0);
        classes[key].push_back(r);
    }
    std::vector<std::vector<int>> res;
    for (auto& [k, c] : classes) res.push_back(std::move(c));
    std::sort(res.begin(), res.end());
    return res;
}

UnitsGroup::UnitsGroup(int m) : m_(m) {
    if (m < 2) throw Error(Errc::InvalidInput, "modulus must be at least 2");
    for (int a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) units_.push_back(a);
}

std::vector<int> UnitsGroup::subgroup_fixing(int i) const {
    std::vector<int> res;
    for (int a : units_)
        if ((static_cast<long long>(a) * i - i) % m_ == 0) res.push_back(a);
    return res;
}

std::vector<int> UnitsGroup::generated(const std::vector<int>& gens) const {
    std::vector<char> in(static_cast<std::size_t>(m_), 0);
    std::vector<int> elems{1 % m_};
    in[1 % m_] = 1;
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (int g : gens) {
            int p = static_cast<int>((static_cast<long long>(elems[k]) * g) % m_);
            if (!in[p]) {
                in[p] = 1;
                elems.push_back(p);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

UnitsGroup units_lattice(int m) { return UnitsGroup(m); }

bool verify_lcm_claim(int m, int i, int j) {
    UnitsGroup u(m);
    std::vector<int> gens = u.subgroup_fixing(i);
    auto fj = u.subgroup_fixing(j);
    gens.insert(gens.end(), fj.begin(), fj.end());
    return u.generated(gens) == u.subgroup_fixing(std::lcm(std::gcd(i, m), std::gcd(j, m)));
}

bool divisors_generate_units(int n) {
    if (n < 3) return true;
    UnitsGroup u(n - 1);
    std::vector<int> gens;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) gens.push_back(d % (n - 1));
    return u.generated(gens) == u.elements();
}

bool membership_monotonicity_check(const Transducer& t, int i, int j) {
    const int m = t.n - 1;
    if (m < 1) return true;
    std::vector<bool> mem(static_cast<std::size_t>(m + 1), false);
    for (int r = 1; r <= m; ++r) mem[r] = member_Onr(t, r).value;
    if (mem[i])
        for (int k = 0; k < m; ++k)
            if ((static_cast<long long>(k) * i - j) % m == 0 && !mem[j]) return false;
    return mem[j] == mem[std::gcd(j, m)];
}

}  // namespace tx
