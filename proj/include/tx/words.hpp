#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace tx {

// Letters 0..n-1 are the alphabet X_n. Over C_{n,r} the dotted root .k is
// encoded as the letter n+k; it can only appear as the first letter of a word.
using Letter = int;
using Word = std::vector<Letter>;

bool is_prefix(const Word& p, const Word& w);
bool comparable(const Word& a, const Word& b);
Word common_prefix(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b);
// w - p for a prefix p of w; throws Errc::Internal otherwise.
Word subtract_prefix(const Word& w, const Word& p);
// Throws Errc::InvalidInput unless every letter is in the C_{n,r} word alphabet.
void check_word(const Word& w, int n, int r = 0);

struct EvPeriodicWord {
    Word pre;
    Word period;

    // Canonical form: primitive period and shortest preperiod.
    static EvPeriodicWord make(Word pre, Word period);
    Letter at(std::size_t i) const;
    Word prefix(std::size_t len) const;
    bool operator==(const EvPeriodicWord&) const = default;
};

enum class Order { Less, Equal, Greater };

Order lex_compare_evp(const EvPeriodicWord& x, const EvPeriodicWord& y);

struct RotationClass {
    Word rep;
    auto operator<=>(const RotationClass&) const = default;
};

RotationClass rotation_class_of(const Word& w);

// A clopen subset of C_n (r = 0) or C_{n,r} (r >= 1) stored as its canonical antichain.
class ClopenSet {
public:
    ClopenSet(int n, int r = 0);

    static ClopenSet whole(int n, int r = 0);
    static ClopenSet cone(int n, int r, const Word& w);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<Word>& cones() const { return cones_; }
    std::size_t size() const { return cones_.size(); }
    bool empty() const { return cones_.empty(); }
    bool is_whole() const { return cones_.size() == 1 && cones_[0].empty(); }

    // Is the point set of U_w contained in the set / does U_w meet the set.
    bool contains_cone(const Word& w) const;
    bool meets_cone(const Word& w) const;

    ClopenSet unite(const ClopenSet& o) const;
    ClopenSet intersect(const ClopenSet& o) const;
    ClopenSet complement() const;
    bool disjoint(const ClopenSet& o) const;
    bool subset_of(const ClopenSet& o) const;

    // { w x : x in this }, living in the space with rootCount roots.
    ClopenSet prefixed(const Word& w, int rootCount) const;

    bool operator==(const ClopenSet&) const = default;

private:
    friend ClopenSet canonicalize_clopen(int n, int r, std::vector<Word> cones);
    int n_;
    int r_;
    std::vector<Word> cones_;
};

ClopenSet canonicalize_clopen(int n, int r, std::vector<Word> cones);

}  // namespace tx
