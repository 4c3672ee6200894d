#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tx/transducer.hpp"

namespace tx {

struct SignatureReport {
    int syncLevel = 0;
    std::vector<int> perWordM;  // empty when n^k is too large to list
    std::uint64_t sig = 0;
    bool sigExact = true;  // false when sig would not fit in 64 bits; rsig is always exact
    int rsig = 1;  // residue mod n-1 in 1..n-1
};

// Residue of v modulo n-1, represented in 1..n-1 (n = 2 gives 1).
int residue(long long v, int n);

SignatureReport signature(const Transducer& t);
int rsig(const Transducer& t);
int rsig_inverse_direct(const Transducer& t);

struct Verdict {
    bool value = false;
    std::string reason;
    explicit operator bool() const { return value; }
};

// Core, synchronizing, every state injective with clopen image, synchronizing inverse.
Verdict validate_On(const Transducer& t);
Verdict member_Onr(const Transducer& t, int r);
Verdict member_TOnr(const Transducer& t, int r);

// Classes of {1..n-1}: r ~ s iff for all j in S, r(j-1) = 0 <=> s(j-1) = 0 mod n-1.
std::vector<std::vector<int>> signature_class_partition(int n, const std::set<int>& S);

class UnitsGroup {
public:
    explicit UnitsGroup(int m);
    int modulus() const { return m_; }
    const std::vector<int>& elements() const { return units_; }
    std::vector<int> subgroup_fixing(int i) const;
    std::vector<int> generated(const std::vector<int>& gens) const;

private:
    int m_;
    std::vector<int> units_;
};

UnitsGroup units_lattice(int m);
bool verify_lcm_claim(int m, int i, int j);
// Do the divisors d > 1 of n, read mod n-1, generate the units of Z_{n-1}?
bool divisors_generate_units(int n);

// member(T,i) and m*i = j mod n-1 imply member(T,j); member(T,j) <=> member(T, gcd(j,n-1)).
bool membership_monotonicity_check(const Transducer& t, int i, int j);

}  // namespace tx
