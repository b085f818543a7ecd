#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"
#include "forestlab/statistics.hpp"

namespace forestlab {

// An element of the hyperoctahedral group B_n in window notation
// sigma_1 ... sigma_n, extended by sigma(-i) = -sigma(i). Elements of S_n
// are the all-positive windows; D_n are the even-signed ones.
class SignedPermutation {
public:
    static SignedPermutation identity(int n);
    static SignedPermutation of(std::vector<int> window);

    // Space- or comma-separated signed integers, e.g. "4 -2 1 5 -3".
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(window_.size()); }

    // sigma(i) for i in {-n..-1, 1..n}.
    int operator()(int i) const;
    const std::vector<int>& window() const { return window_; }

    SignedPermutation inverse() const;

    bool is_unsigned() const;
    bool is_even_signed() const;

    std::string to_string() const;
    std::string cycle_string() const;  // e.g. "(1 3)(2 -5 -2 5)(4 -4)"

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> window_;
};

// One cycle per mirror pair {C, -C}, starting at the positive minimal
// absolute value. Unbalanced cycles (those containing both x and -x) are
// listed with their full 2k elements.
struct Cycle {
    std::vector<int> elements;
    bool balanced = false;
    int min_abs = 0;
};

std::vector<Cycle> cycle_decomposition(const SignedPermutation& sigma);

// Variant A (unsigned only): minimal elements of all cycles.
// Variant B: minimal absolute values of balanced cycles.
std::vector<int> cyc_min(const SignedPermutation& sigma, Variant variant);

// Right-to-left minimum letters.
//   A: sigma_i < sigma_j for all j > i            (unsigned only)
//   B: 0 < sigma_i < |sigma_j| for all j > i
//   D: 1 < sigma_i < |sigma_j| for all j > i      (even-signed only)
std::vector<int> rlmin(const SignedPermutation& sigma, Variant variant);

// Sorting index via Straight Selection Sort: place n, n-1, ..., 1 by one
// (possibly sign-flipping) transposition each; cost j - i per plain swap and
// j - i - 1 with i negated for a flipping one.
int ssort_sor(const SignedPermutation& sigma, Variant variant);

// Coxeter length: A = inv, B = inv + n_1 + n_2, D = inv + n_2, all on the
// window word.
int length(const SignedPermutation& sigma, Variant variant);

// The chain forest used to read permutations as labeled linear trees.
Forest linear_tree_bridge(int n);

// sigma = w(v_1) ... w(v_n); f must be the linear tree.
SignedPermutation read_word(const Forest& f, const Labeling& w);

// w o w_nat^{-1} extended to B_n, for a natural positive w_nat.
SignedPermutation quotient_permutation(const Labeling& w, const Labeling& w_nat);

template <class Fn>
void for_each_permutation(int n, Variant variant, Fn&& fn) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<int> win(n);
    do {
        if (variant == Variant::A) {
            fn(SignedPermutation::of(perm));
            continue;
        }
        const std::uint64_t masks = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            if (variant == Variant::D && (std::popcount(mask) & 1)) continue;
            for (int i = 0; i < n; ++i)
                win[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
            fn(SignedPermutation::of(win));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace forestlab
