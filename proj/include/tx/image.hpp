#pragma once

#include <string>
#include <vector>

#include "tx/transducer.hpp"
#include "tx/words.hpp"

namespace tx {

inline constexpr int kDefaultImageIterations = 32;
// Passed as cap: use max(kDefaultImageIterations, 4 |Q|).
inline constexpr int kAutoImageIterations = -1;
inline constexpr int kMaxImageCones = 4096;

// Images of every state. States that still owe the dotted root (the region R of
// an initial transducer) get images in C_{n,r}; all others in C_n.
// Throws Errc::NotClopen when the approximants do not stabilise or one of them
// exceeds kMaxImageCones cones.
std::vector<ClopenSet> images(const Transducer& t, int cap = kAutoImageIterations);
ClopenSet image(const Transducer& t, int q, int cap = kAutoImageIterations);

int m_of_state(const Transducer& t, int q);

bool is_injective_state(const Transducer& t, int q, const std::vector<ClopenSet>& im);
bool is_injective_state(const Transducer& t, int q);
bool is_homeomorphism_state(const Transducer& t, int q);

struct StateReport {
    std::string name;
    ClopenSet image;
    int m = 0;
    bool injective = false;
    bool homeomorphism = false;
};

std::vector<StateReport> analyze(const Transducer& t);

enum class Orientation { Preserving, Reversing, Neither };
const char* orientation_name(Orientation o);

// Boundary test at every state: compares h_p(x (n-1)^w) with h_p(y 0^w) for x < y.
Orientation orientation(const Transducer& t);

}  // namespace tx
