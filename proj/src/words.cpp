#include "tx/words.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tx/error.hpp"

namespace tx {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidInput: return "invalid-input";
        case Errc::Parse: return "parse-error";
        case Errc::DepthExceeded: return "depth-exceeded";
        case Errc::Degenerate: return "degenerate-transducer";
        case Errc::NotSynchronizing: return "not-synchronizing";
        case Errc::NotInvertible: return "not-invertible";
        case Errc::NotClopen: return "not-clopen";
        case Errc::Resource: return "resource-exceeded";
        case Errc::SearchExhausted: return "search-exhausted";
        case Errc::Validation: return "validation-failed";
        case Errc::Internal: return "internal-error";
    }
    return "error";
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool comparable(const Word& a, const Word& b) {
    return a.size() <= b.size() ? is_prefix(a, b) : is_prefix(b, a);
}

Word common_prefix(const Word& a, const Word& b) {
    auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return Word(a.begin(), mm.first);
}

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Word subtract_prefix(const Word& w, const Word& p) {
    if (!is_prefix(p, w)) throw Error(Errc::Internal, "word subtraction of a non-prefix");
    return Word(w.begin() + static_cast<std::ptrdiff_t>(p.size()), w.end());
}

void check_word(const Word& w, int n, int r) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter a = w[i];
        bool ok = (a >= 0 && a < n) || (i == 0 && r > 0 && a >= n && a < n + r);
        if (!ok)
            throw Error(Errc::InvalidInput,
                        "letter " + std::to_string(a) + " at position " + std::to_string(i) +
                            " is outside the alphabet");
    }
}

// ---- eventually periodic words ----

EvPeriodicWord EvPeriodicWord::make(Word pre, Word period) {
    if (period.empty()) throw Error(Errc::InvalidInput, "empty period");
    std::size_t len = period.size();
    for (std::size_t p = 1; p <= len; ++p) {
        if (len % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < len && ok; ++i) ok = period[i] == period[i - p];
        if (ok) {
            period.resize(p);
            break;
        }
    }
    while (!pre.empty() && pre.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        pre.pop_back();
    }
    return EvPeriodicWord{std::move(pre), std::move(period)};
}

Letter EvPeriodicWord::at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
}

Word EvPeriodicWord::prefix(std::size_t len) const {
    Word w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = at(i);
    return w;
}

Order lex_compare_evp(const EvPeriodicWord& x, const EvPeriodicWord& y) {
    std::size_t horizon = std::max(x.pre.size(), y.pre.size()) +
                          std::lcm(x.period.size(), y.period.size());
    for (std::size_t i = 0; i < horizon; ++i) {
        Letter a = x.at(i), b = y.at(i);
        if (a != b) return a < b ? Order::Less : Order::Greater;
    }
    return Order::Equal;
}

RotationClass rotation_class_of(const Word& w) {
    if (w.empty()) throw Error(Errc::InvalidInput, "rotation class of the empty word");
    Word best = w, cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return RotationClass{best};
}

// ---- clopen sets ----

namespace {

void validate_cone(const Word& w, int n, int r) {
    if (r > 0 && !w.empty() && w[0] < n)
        throw Error(Errc::InvalidInput, "cone in C_{n,r} must start with a dotted root");
    check_word(w, n, r);
}

int child_count(const Word& parent, int n, int r) { return parent.empty() && r > 0 ? r : n; }

Letter first_child(const Word& parent, int n, int r) { return parent.empty() && r > 0 ? n : 0; }

void absorb(std::vector<Word>& cones) {
    std::vector<Word> kept;
    kept.reserve(cones.size());
    for (auto& w : cones)
        if (kept.empty() || !is_prefix(kept.back(), w)) kept.push_back(std::move(w));
    cones.swap(kept);
}

// Siblings of a canonical, absorbed, sorted antichain are contiguous.
bool merge_siblings(std::vector<Word>& cones, int n, int r) {
    bool changed = false;
    std::vector<Word> out;
    out.reserve(cones.size());
    std::size_t i = 0;
    while (i < cones.size()) {
        const Word& w = cones[i];
        if (!w.empty()) {
            Word parent(w.begin(), w.end() - 1);
            int k = child_count(parent, n, r);
            Letter c0 = first_child(parent, n, r);
            bool full = w.back() == c0 && i + static_cast<std::size_t>(k) <= cones.size();
            for (int c = 0; full && c < k; ++c) {
                const Word& s = cones[i + static_cast<std::size_t>(c)];
                full = s.size() == w.size() && s.back() == c0 + c && is_prefix(parent, s);
            }
            if (full) {
                out.push_back(std::move(parent));
                i += static_cast<std::size_t>(k);
                changed = true;
                continue;
            }
        }
        out.push_back(cones[i]);
        ++i;
    }
    cones.swap(out);
    return changed;
}

}  // namespace

ClopenSet canonicalize_clopen(int n, int r, std::vector<Word> cones) {
    if (n < 2) throw Error(Errc::InvalidInput, "alphabet needs n >= 2");
    if (r < 0) throw Error(Errc::InvalidInput, "negative root count");
    for (const auto& w : cones) validate_cone(w, n, r);
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    absorb(cones);
    while (merge_siblings(cones, n, r)) absorb(cones);
    ClopenSet s(n, r);
    s.cones_ = std::move(cones);
    return s;
}

ClopenSet::ClopenSet(int n, int r) : n_(n), r_(r) {}

ClopenSet ClopenSet::whole(int n, int r) { return canonicalize_clopen(n, r, {Word{}}); }

ClopenSet ClopenSet::cone(int n, int r, const Word& w) { return canonicalize_clopen(n, r, {w}); }

bool ClopenSet::contains_cone(const Word& w) const {
    for (const auto& c : cones_)
        if (is_prefix(c, w)) return true;
    return false;
}

bool ClopenSet::meets_cone(const Word& w) const {
    for (const auto& c : cones_)
        if (comparable(c, w)) return true;
    return false;
}

static void require_same_space(const ClopenSet& a, const ClopenSet& b) {
    if (a.n() != b.n() || a.r() != b.r())
        throw Error(Errc::InvalidInput, "clopen sets over different spaces");
}

ClopenSet ClopenSet::unite(const ClopenSet& o) const {
    require_same_space(*this, o);
    std::vector<Word> all = cones_;
    all.insert(all.end(), o.cones_.begin(), o.cones_.end());
    return canonicalize_clopen(n_, r_, std::move(all));
}

ClopenSet ClopenSet::intersect(const ClopenSet& o) const {
    require_same_space(*this, o);
    std::vector<Word> all;
    for (const auto& u : cones_)
        for (const auto& v : o.cones_) {
            if (is_prefix(u, v))
                all.push_back(v);
            else if (is_prefix(v, u))
                all.push_back(u);
        }
    return canonicalize_clopen(n_, r_, std::move(all));
}

static void complement_rec(const Word& at, const std::vector<const Word*>& below, int n, int r,
                           std::vector<Word>& out) {
    if (below.empty()) {
        out.push_back(at);
        return;
    }
    for (const Word* w : below)
        if (w->size() == at.size()) return;  // the whole cone at `at` is in the set
    int k = child_count(at, n, r);
    Letter c0 = first_child(at, n, r);
    for (int c = 0; c < k; ++c) {
        Word child = at;
        child.push_back(c0 + c);
        std::vector<const Word*> sub;
        for (const Word* w : below)
            if (is_prefix(child, *w)) sub.push_back(w);
        complement_rec(child, sub, n, r, out);
    }
}

ClopenSet ClopenSet::complement() const {
    std::vector<const Word*> all;
    for (const auto& w : cones_) all.push_back(&w);
    std::vector<Word> out;
    complement_rec(Word{}, all, n_, r_, out);
    return canonicalize_clopen(n_, r_, std::move(out));
}

bool ClopenSet::disjoint(const ClopenSet& o) const {
    require_same_space(*this, o);
    for (const auto& u : cones_)
        for (const auto& v : o.cones_)
            if (comparable(u, v)) return false;
    return true;
}

bool ClopenSet::subset_of(const ClopenSet& o) const {
    require_same_space(*this, o);
    for (const auto& u : cones_)
        if (!o.contains_cone(u)) return false;
    return true;
}

ClopenSet ClopenSet::prefixed(const Word& w, int rootCount) const {
    std::vector<Word> all;
    all.reserve(cones_.size());
    for (const auto& c : cones_) all.push_back(concat(w, c));
    return canonicalize_clopen(n_, rootCount, std::move(all));
}

}  // namespace tx
