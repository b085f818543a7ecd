#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "forestlab/forest.hpp"

namespace forestlab {

enum class LabelClass { Unsigned, Signed, EvenSigned };

std::string_view label_class_name(LabelClass cls);
LabelClass label_class_from_name(std::string_view name);

// A signed labeling w of v_1..v_n: nonzero integers whose absolute values
// form a permutation of {1..n}, so at most one of {i, -i} is used. Unsigned
// labelings are the all-positive ones; no separate tag is stored.
class Labeling {
public:
    // Throws std::invalid_argument on anything that is not a labeling.
    static Labeling of(std::vector<int> values);

    // Comma-separated signed integers in vertex order, e.g. "3,-5,1,-4,2".
    static Labeling parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }

    // Value at vertex v, 1-based.
    int operator[](int v) const { return values_[v - 1]; }
    int at(int v) const;
    const std::vector<int>& values() const { return values_; }

    bool all_positive() const;
    int negative_count() const;   // n_1
    int positive_count() const;   // p
    bool is_even_signed() const;

    // Positive and order-preserving on (V, <_F): w(u) < w(parent(u)) everywhere.
    bool is_natural(const Forest& f) const;

    std::string to_string() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
    friend auto operator<=>(const Labeling&, const Labeling&) = default;

private:
    std::vector<int> values_;
};

// Number of labelings of an n-vertex forest in the class:
// n!, 2^n n!, or 2^(n-1) n!. Throws std::overflow_error when out of range.
std::uint64_t labeling_count(int n, LabelClass cls);

// Guard against accidental factorial blow-up in exhaustive enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = 200'000'000;

void check_enumeration_bound(int n, LabelClass cls,
                             std::uint64_t cap = kDefaultEnumerationCap);

// Permutation of {1..n} with the given lexicographic rank (0-based).
std::vector<int> permutation_at(int n, std::uint64_t rank);

// Streams every labeling of the class in a fixed documented order:
// permutations of {1..n} ascending lexicographically; within a permutation,
// sign masks 0..2^n-1 ascending, bit j set = vertex v_{j+1} negative
// (even-signed skips odd-popcount masks). Throws via check_enumeration_bound.
template <class Fn>
void for_each_labeling(const Forest& f, LabelClass cls, Fn&& fn,
                       std::uint64_t cap = kDefaultEnumerationCap) {
    const int n = f.size();
    check_enumeration_bound(n, cls, cap);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<int> vals(n);
    do {
        if (cls == LabelClass::Unsigned) {
            fn(Labeling::of(perm));
            continue;
        }
        const std::uint64_t masks = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (cls == LabelClass::EvenSigned && (std::popcount(mask) & 1)) continue;
            for (int i = 0; i < n; ++i)
                vals[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
            fn(Labeling::of(vals));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Labeling> all_labelings(const Forest& f, LabelClass cls,
                                    std::uint64_t cap = kDefaultEnumerationCap);

// Streams the natural labelings (linear extensions) of f: exactly
// natural_labeling_count(f) of them, each positive with zero inversions.
template <class Fn>
void for_each_natural_labeling(const Forest& f, Fn&& fn) {
    const int n = f.size();
    std::vector<int> vals(n, 0);
    std::uint64_t labeled = 0;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            fn(Labeling::of(vals));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if ((labeled >> (v - 1)) & 1) continue;
            if ((f.below_mask(v) & ~labeled) != 0) continue;  // some descendant unlabeled
            vals[v - 1] = next;
            labeled |= std::uint64_t{1} << (v - 1);
            self(self, next + 1);
            labeled &= ~(std::uint64_t{1} << (v - 1));
            vals[v - 1] = 0;
        }
    };
    rec(rec, 1);
}

std::vector<Labeling> all_natural_labelings(const Forest& f);

// Restriction of w to the subtree rooted at v_j, with absolute values
// replaced by their ranks (smallest -> 1) and signs kept; entries are in
// increasing vertex-index order, forming a labeling of f.subtree(j).
Labeling induced_sublabeling(const Forest& f, const Labeling& w, int j);

}  // namespace forestlab
