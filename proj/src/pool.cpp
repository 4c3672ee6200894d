#include "tx/pool.hpp"

#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tx/constructions.hpp"
#include "tx/error.hpp"
#include "tx/image.hpp"
#include "tx/inverse.hpp"
#include "tx/signature.hpp"

namespace tx {

std::vector<PoolEntry> base_pool(int n) {
    std::vector<PoolEntry> b;
    auto add = [&](std::string name, const Transducer& t) { b.push_back({std::move(name), GroupElement(t), -1, -1}); };
    add("id", identity(n));
    add("pi", pi_R(n));
    if (n == 4) add("g", example_g());
    add("T", example_T(n));
    add("U", example_U(n));
    add("oplus1", oplus(1, identity(1), n));
    for (int d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Letter> cyc(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) cyc[i] = (i + 1) % d;
        add("oplus" + std::to_string(d), oplus(d, permutation(cyc), n));
    }
    return b;
}

namespace {

std::vector<PoolEntry> grow(const std::vector<PoolEntry>& base, int maxLength, bool parallel) {
    if (maxLength < 1) throw Error(Errc::InvalidInput, "product length must be at least 1");
    std::vector<PoolEntry> pool = base;
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i].base = static_cast<int>(i);
    std::size_t levelStart = 0;
    const long long B = static_cast<long long>(base.size());
    for (int len = 2; len <= maxLength; ++len) {
        const std::size_t levelEnd = pool.size();
        const long long P = static_cast<long long>(levelEnd - levelStart);
        std::vector<std::optional<PoolEntry>> next(static_cast<std::size_t>(P * B));
        std::vector<std::string> errors(next.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long long k = 0; k < P * B; ++k) {
            const std::size_t pi = levelStart + static_cast<std::size_t>(k / B);
            const std::size_t bi = static_cast<std::size_t>(k % B);
            try {
                next[k].emplace(PoolEntry{pool[pi].name + "*" + base[bi].name,
                                          group_product(pool[pi].elem, base[bi].elem), static_cast<int>(pi),
                                          static_cast<int>(bi)});
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
        for (std::size_t k = 0; k < next.size(); ++k)
            if (!next[k]) throw Error(Errc::Internal, "pool product failed: " + errors[k]);
        for (auto& e : next) pool.push_back(std::move(*e));
        levelStart = levelEnd;
    }
    return pool;
}

ElementReport report(const std::vector<PoolEntry>& pool, std::size_t i) {
    const PoolEntry& e = pool[i];
    const Transducer& m = e.elem.machine();
    const int n = m.n;
    ElementReport r;
    r.name = e.name;
    r.states = m.size();
    r.rsig = e.elem.rsig();
    r.rsigInverse = tx::rsig(invert_core(m));
    r.rsigInverseDirect = rsig_inverse_direct(m);
    r.rsigExpected = e.prefix < 0 ? r.rsig
                                  : residue(static_cast<long long>(pool[e.prefix].elem.rsig()) *
                                                pool[e.base].elem.rsig(),
                                            n);
    auto im = images(m);
    r.mConstant = true;
    for (const auto& s : im)
        if (residue(static_cast<long long>(s.size()), n) != residue(static_cast<long long>(im[0].size()), n))
            r.mConstant = false;
    r.orientation = e.elem.orientation();
    return r;
}

std::vector<ElementReport> run_reports(const std::vector<PoolEntry>& pool, bool parallel) {
    std::vector<std::optional<ElementReport>> out(pool.size());
    std::vector<std::string> errors(pool.size());
    const long long N = static_cast<long long>(pool.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < N; ++i) {
        try {
            out[i] = report(pool, static_cast<std::size_t>(i));
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    std::vector<ElementReport> res;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!out[i]) throw Error(Errc::Internal, "report for " + pool[i].name + " failed: " + errors[i]);
        res.push_back(std::move(*out[i]));
    }
    return res;
}

}  // namespace

std::vector<PoolEntry> product_pool(const std::vector<PoolEntry>& base, int maxLength, bool parallel) {
    return grow(base, maxLength, parallel);
}

std::vector<PoolEntry> product_pool_serial(const std::vector<PoolEntry>& base, int maxLength) {
    return grow(base, maxLength, false);
}

std::vector<ElementReport> analyze_pool(const std::vector<PoolEntry>& pool, bool parallel) {
    return run_reports(pool, parallel);
}

std::vector<ElementReport> analyze_pool_serial(const std::vector<PoolEntry>& pool) { return run_reports(pool, false); }

int pool_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace tx
