#pragma once

#include <cstdint>
#include <vector>

#include "tx/transducer.hpp"

namespace tx {

// Underlying automaton over X_n. For an initial transducer over C_{n,r} the
// dotted root is left out: only X_n letters are read from the other states.
struct Automaton {
    int n = 2;
    std::vector<std::vector<int>> next;
    std::vector<int> origin;  // automaton state -> transducer state

    int size() const { return static_cast<int>(next.size()); }
};

Automaton automaton_of(const Transducer& t);

struct CollapseStep {
    Automaton result;
    std::vector<int> cls;  // state of the input automaton -> class
};

// One collapsing step: p ~ q when they move to the same state on every letter.
CollapseStep collapse(const Automaton& a);
Automaton collapse(const Transducer& t);

bool is_synchronizing(const Automaton& a);
bool is_synchronizing(const Transducer& t);

// Least k with every length-k word sending all states to one state.
int minimal_sync_level(const Transducer& t);

// Sub-transducer on the states forced by words of the minimal level; over X_n
// even when the input is an initial transducer over C_{n,r}.
Transducer core(const Transducer& t);
bool is_core(const Transducer& t);

// counts[q] = number of words of length k forcing state q (k >= level).
std::vector<std::uint64_t> forced_counts(const Transducer& t, int k);
// forced state of each word of length k, words in lexicographic order.
std::vector<int> forced_states(const Transducer& t, int k);

}  // namespace tx
