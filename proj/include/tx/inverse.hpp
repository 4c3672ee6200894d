#pragma once

#include <string>
#include <vector>

#include "tx/transducer.hpp"
#include "tx/words.hpp"

namespace tx {

inline constexpr int kDefaultInverseCap = 10000;
inline constexpr int kDefaultPreimageDepth = 64;

struct InverseOptions {
    int stateCap = kDefaultInverseCap;
    int depth = kDefaultPreimageDepth;
};

// Greatest common prefix of the inputs mapped by h_q into U_v.
Word L(const Transducer& t, int q, const Word& v, const std::vector<ClopenSet>& im,
       int depth = kDefaultPreimageDepth);
Word L(const Transducer& t, int q, const Word& v);

// Forward closure of the states (w, q) with (w)L_q = e and U_w inside im(q),
// started from (e, q0). Requires q0 to be a homeomorphism state.
Rooted invert_initial(const Rooted& a, const InverseOptions& opt = {});

// Same closure started after the machine has produced nu from state q; used to
// reach the inverse's core from a state that is not a homeomorphism state.
// Reading y, the result emits x with h_q(L_q(nu) x) = nu y; the prefix
// L_q(nu) itself is not emitted.
Rooted invert_from(const Transducer& t, int q, const Word& nu, const InverseOptions& opt = {});

// Inverse of a core element: root, invert, minimise, take the core.
Transducer invert_core(const Transducer& g, int root = 0, const InverseOptions& opt = {});

struct BisyncResult {
    bool value = false;
    bool invertible = false;
    std::string reason;
};

BisyncResult is_bisynchronizing(const Rooted& a, const InverseOptions& opt = {});

}  // namespace tx
