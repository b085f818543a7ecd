#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace forestlab {

// Exponent vector of one term in Z[q, p, t_1..t_n]. Every polynomial built
// by this library has t-exponents 0 or 1 (each vertex contributes at most
// one t_v per labeling), so they are packed in a bitmask: bit (v-1) = t_v.
struct Monomial {
    int q = 0;
    int p = 0;
    std::uint64_t t_mask = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b);
std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b);

// Sparse polynomial with exact 64-bit integer coefficients; no zero
// coefficients are stored and terms are kept in a sorted map, so printing
// and comparison are canonical. Arithmetic throws std::overflow_error
// instead of wrapping.
class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly zero() { return {}; }
    static MultiPoly constant(std::int64_t c);
    static MultiPoly q(int exponent = 1);
    static MultiPoly p(int exponent = 1);
    static MultiPoly t(int v);  // t_v, 1-based
    static MultiPoly monomial(Monomial m, std::int64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, std::int64_t coeff);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

    MultiPoly scaled(std::int64_t c) const;

    // Exact division by an integer; throws std::domain_error when some
    // coefficient is not divisible.
    MultiPoly divided_exact(std::int64_t c) const;

    // p := value (collapses the p grading).
    MultiPoly substitute_p(std::int64_t value) const;

    // t_v := 1 for the vertices in mask.
    MultiPoly substitute_t_one(std::uint64_t mask) const;

    // Value at q = p = 1, all t_v = 1.
    std::int64_t evaluate_all_ones() const;

    // Replaces each t-set by its size, recorded as the p exponent; the
    // polynomial must not already use p.
    MultiPoly collapse_t_to_count() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Canonical text, terms in exponent order: "8*q^2*t1*t2 + t3 + 5".
    std::string to_string() const;

private:
    std::map<Monomial, std::int64_t> terms_;
};

// [k] = 1 + q + ... + q^(k-1); throws std::invalid_argument for k < 1.
MultiPoly q_int(int k);

std::string monomial_to_string(const Monomial& m);

struct PolyDifference {
    Monomial monomial;
    std::int64_t lhs_coeff = 0;
    std::int64_t rhs_coeff = 0;
};

// Exact comparison; on inequality reports the first differing exponent
// vector in canonical order.
std::optional<PolyDifference> poly_diff(const MultiPoly& a, const MultiPoly& b);
bool poly_equal(const MultiPoly& a, const MultiPoly& b);

}  // namespace forestlab
