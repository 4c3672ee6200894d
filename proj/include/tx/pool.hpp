#pragma once

#include <string>
#include <vector>

#include "tx/group.hpp"

namespace tx {

struct PoolEntry {
    std::string name;  // generator word, e.g. "T*U*pi"
    GroupElement elem;
    int prefix = -1;  // index of the entry this one extends, -1 for base entries
    int base = -1;    // index into the base list of the last factor
};

// id, pi_R, g (n=4), T, U and the oplus examples available at n.
std::vector<PoolEntry> base_pool(int n);

// Closes base under products of length <= maxLength. Each product of length k
// is built as (entry of length k-1) * (base element). Output order is fixed:
// by length, then by prefix index, then by base index.
std::vector<PoolEntry> product_pool(const std::vector<PoolEntry>& base, int maxLength, bool parallel = true);
std::vector<PoolEntry> product_pool_serial(const std::vector<PoolEntry>& base, int maxLength);

struct ElementReport {
    std::string name;
    int states = 0;
    int rsig = 0;
    int rsigInverse = 0;        // rsig of invert_core
    int rsigInverseDirect = 0;  // computed without building the inverse
    int rsigExpected = 0;       // rsig(prefix) * rsig(base) mod n-1, or rsig for base entries
    bool mConstant = false;     // m_q mod n-1 equal over all states
    Orientation orientation = Orientation::Neither;

    bool homomorphic() const { return rsig == rsigExpected; }
    bool inverseConsistent() const { return rsigInverse == rsigInverseDirect; }
    bool operator==(const ElementReport&) const = default;
};

std::vector<ElementReport> analyze_pool(const std::vector<PoolEntry>& pool, bool parallel = true);
std::vector<ElementReport> analyze_pool_serial(const std::vector<PoolEntry>& pool);

// Number of worker threads the parallel kernels would use.
int pool_threads();

}  // namespace tx
