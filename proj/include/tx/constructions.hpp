#pragma once

#include <string>
#include <vector>

#include "tx/transducer.hpp"
#include "tx/words.hpp"

namespace tx {

Transducer identity(int n);
Transducer pi_R(int n);
// Single-state synchronous machine applying a permutation of X_n.
Transducer permutation(const std::vector<Letter>& perm);

Transducer example_g();
Transducer example_T(int n);
Transducer example_U(int n);
// T and U restricted to the letters {0, n-1}, recoded over {0, 1}.
Transducer example_A(int n);
Transducer example_B(int n);

// Identity of C_{n,r} as an initial transducer.
Rooted identity_initial(int n, int r);
// .a xi -> .a h_q(xi) for every root; valid when q is a homeomorphism state.
Rooted wrap_state(const Transducer& g, int q, int r);

// Synchronous, synchronizing, every state a permutation of X_d.
bool is_Hd(const Transducer& t);
Transducer oplus(int d, const Transducer& t, int n);

struct PrefixExchange {
    int n = 2;
    int r = 1;
    std::vector<Word> domain;  // complete antichain of C_{n,r}, dotted words
    std::vector<Word> range;
    std::vector<int> bijection;  // domain[i] -> range[bijection[i]]

    // True when, with both antichains in lexicographic order, the bijection is
    // a cyclic shift i -> i + j mod l.
    bool is_cyclic() const;
};

Rooted from_prefix_exchange(const PrefixExchange& pe);

struct ViableCombination {
    std::vector<Word> prefixes;
    std::vector<int> states;

    std::size_t size() const { return prefixes.size(); }
    bool operator==(const ViableCombination&) const = default;
};

inline constexpr int kDefaultViableDepth = 3;

bool is_viable(const Transducer& g, const ViableCombination& v);
// maxSize < 0 selects the default 3(n-1)+1. Results are ordered by size, then
// lexicographically by the pieces' positions.
std::vector<ViableCombination> viable_combinations(const Transducer& g, int maxPrefixDepth = kDefaultViableDepth,
                                                   int maxSize = -1, std::size_t limit = 256);
ViableCombination expand_viable(const Transducer& g, const ViableCombination& v, std::size_t i);
ViableCombination reorder_lexicographic(const Transducer& g, const ViableCombination& v);

struct RealizeOptions {
    int maxPrefixDepth = kDefaultViableDepth;
    int maxSize = -1;
};

// Minimal initial transducer over C_{n,r} whose core is g.
Rooted realize_in_TBnr(const Transducer& g, int r, const RealizeOptions& opt = {});

}  // namespace tx
