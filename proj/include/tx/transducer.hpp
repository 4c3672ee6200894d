#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tx/words.hpp"

namespace tx {

inline constexpr int kNone = -1;
inline constexpr int kDefaultGcpDepth = 64;

// Letter-to-word machine over X_n. With r > 0 the machine is an initial
// transducer over C_{n,r}: exactly one state (the dotted root) reads the
// dotted letters n..n+r-1 and no X_n letters; all other states read X_n only.
struct Transducer {
    int n = 2;
    int r = 0;
    std::vector<std::string> names;
    std::vector<std::vector<int>> next;  // next[q][a], kNone when undefined
    std::vector<std::vector<Word>> out;  // out[q][a]

    Transducer() = default;
    Transducer(int n_, int r_ = 0) : n(n_), r(r_) {}

    int size() const { return static_cast<int>(next.size()); }
    int letters() const { return n + r; }
    bool defined(int q, Letter a) const { return next[q][a] != kNone; }
    int add_state(std::string name);
    void set(int q, Letter a, int to, Word w);
    int find_state(const std::string& name) const;  // kNone if absent
    // The state reading dotted letters, kNone when r == 0.
    int dotted_root() const;
};

// A transducer observed from a designated state: an initial transducer.
struct Rooted {
    Transducer m;
    int root = 0;
};

// Structural checks: table shape, letters in range, the C_{n,r} layout, and the
// absence of empty-output cycles. Throws Errc::InvalidInput / Errc::Degenerate.
void validate(const Transducer& t);

std::pair<Word, int> evaluate(const Transducer& t, int q, const Word& w);
EvPeriodicWord evaluate_periodic(const Transducer& t, int q, const EvPeriodicWord& x);

// Cartesian product; h over (q,p) is h_q followed by h_p.
Transducer product(const Transducer& a, const Transducer& b);
Rooted product(const Rooted& a, const Rooted& b);

Rooted accessible(const Rooted& t);

// Greatest common prefix of all outputs h_q(delta). Throws DepthExceeded when it
// does not resolve within `depth` letters.
Word forced_prefix(const Transducer& t, int q, int depth = kDefaultGcpDepth);

bool has_incomplete_response(const Transducer& t, int depth = kDefaultGcpDepth);
Rooted remove_incomplete_response(const Rooted& t, int depth = kDefaultGcpDepth);

bool omega_equivalent(const Transducer& t, int q1, int q2, int depth = kDefaultGcpDepth);

// Accessible, no incomplete response, no omega-equivalent pair; states numbered
// breadth-first from the root with letters in increasing order.
Rooted minimize(const Rooted& t, int depth = kDefaultGcpDepth);
Rooted minimize_rooted(const Transducer& t, int q, int depth = kDefaultGcpDepth);

// Breadth-first renumbering from the root, dropping unreachable states.
Rooted bfs_numbering(const Rooted& t);

// Equal tables after breadth-first numbering; names are ignored.
bool same_machine(const Rooted& a, const Rooted& b);
bool same_table(const Transducer& a, const Transducer& b);

Transducer restrict_states(const Transducer& t, const std::vector<int>& keep);

}  // namespace tx
