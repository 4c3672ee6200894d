#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tx/image.hpp"
#include "tx/signature.hpp"
#include "tx/transducer.hpp"
#include "tx/words.hpp"

namespace tx {

inline constexpr int kDefaultOrderStateCap = 512;

// Minimal core form of a core machine with a root-independent state numbering:
// the lexicographically least breadth-first table over all choices of root.
Transducer canonical_core_form(const Transducer& t);

// An element of O_n: minimal, core, bi-synchronizing, every state injective
// with clopen image. Construction validates and canonicalises.
class GroupElement {
public:
    explicit GroupElement(const Transducer& t);

    const Transducer& machine() const { return m_; }
    int n() const { return m_.n; }
    const SignatureReport& signature() const { return sig_; }
    int rsig() const { return sig_.rsig; }
    Orientation orientation() const { return orient_; }

private:
    struct Trusted {};
    GroupElement(Trusted, Transducer t);
    friend GroupElement group_product(const GroupElement&, const GroupElement&);
    friend GroupElement group_inverse(const GroupElement&);
    friend GroupElement identity_element(int n);

    Transducer m_;
    SignatureReport sig_;
    Orientation orient_ = Orientation::Neither;
};

GroupElement identity_element(int n);
// g then h: input flows through g first.
GroupElement group_product(const GroupElement& g, const GroupElement& h);
GroupElement group_inverse(const GroupElement& g);
bool is_identity(const GroupElement& g);
bool equal(const GroupElement& g, const GroupElement& h);

struct OrderResult {
    bool finite = false;
    int order = 0;
    std::vector<int> stateCounts;  // states of g^1, g^2, ...
};

OrderResult order(const GroupElement& g, int bound, int stateCap = kDefaultOrderStateCap);

RotationClass rotation_action(const GroupElement& g, const RotationClass& c);
std::vector<int> orbit_lengths(const GroupElement& g, const RotationClass& c, int steps);

using GroupWord = std::vector<std::pair<std::string, int>>;  // (generator, +1 or -1)

GroupElement evaluate_group_word(const std::map<std::string, GroupElement>& gens, const GroupWord& word);
bool verify_relation(const std::map<std::string, GroupElement>& gens, const GroupWord& word);
// [a, b] = a^-1 b^-1 a b for words a and b.
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord inverse_word(const GroupWord& w);

enum class ZeroFixing { FixesBoth, Swaps };
ZeroFixing zero_fixing_check(const GroupElement& g);

}  // namespace tx
