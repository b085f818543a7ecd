#include "forestlab/multipoly.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace forestlab {

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit addition overflow");
    return r;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit multiplication overflow");
    return r;
}

MultiPoly MultiPoly::constant(std::int64_t c) { return monomial(Monomial{}, c); }

MultiPoly MultiPoly::q(int exponent) { return monomial(Monomial{exponent, 0, 0}, 1); }

MultiPoly MultiPoly::p(int exponent) { return monomial(Monomial{0, exponent, 0}, 1); }

MultiPoly MultiPoly::t(int v) {
    if (v < 1 || v > 64) throw std::out_of_range("t variable index out of range");
    return monomial(Monomial{0, 0, std::uint64_t{1} << (v - 1)}, 1);
}

MultiPoly MultiPoly::monomial(Monomial m, std::int64_t coeff) {
    MultiPoly out;
    out.add_term(m, coeff);
    return out;
}

std::int64_t MultiPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void MultiPoly::add_term(const Monomial& m, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second = checked_add_i64(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly out;
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            if (ma.t_mask & mb.t_mask)
                throw std::domain_error("t-exponent above 1 in polynomial product");
            const Monomial m{ma.q + mb.q, ma.p + mb.p, ma.t_mask | mb.t_mask};
            out.add_term(m, checked_mul_i64(ca, cb));
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(std::int64_t c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, checked_mul_i64(coeff, c));
    return out;
}

MultiPoly MultiPoly::divided_exact(std::int64_t c) const {
    if (c == 0) throw std::domain_error("division by zero");
    MultiPoly out;
    for (const auto& [m, coeff] : terms_) {
        if (coeff % c != 0) throw std::domain_error("coefficient not divisible in exact division");
        out.terms_.emplace(m, coeff / c);
    }
    return out;
}

MultiPoly MultiPoly::substitute_p(std::int64_t value) const {
    MultiPoly out;
    for (const auto& [m, coeff] : terms_) {
        std::int64_t factor = 1;
        for (int k = 0; k < m.p; ++k) factor = checked_mul_i64(factor, value);
        out.add_term(Monomial{m.q, 0, m.t_mask}, checked_mul_i64(coeff, factor));
    }
    return out;
}

MultiPoly MultiPoly::substitute_t_one(std::uint64_t mask) const {
    MultiPoly out;
    for (const auto& [m, coeff] : terms_)
        out.add_term(Monomial{m.q, m.p, m.t_mask & ~mask}, coeff);
    return out;
}

std::int64_t MultiPoly::evaluate_all_ones() const {
    std::int64_t total = 0;
    for (const auto& [m, coeff] : terms_) total = checked_add_i64(total, coeff);
    return total;
}

MultiPoly MultiPoly::collapse_t_to_count() const {
    MultiPoly out;
    for (const auto& [m, coeff] : terms_) {
        if (m.p != 0) throw std::domain_error("collapse_t_to_count: p already in use");
        out.add_term(Monomial{m.q, std::popcount(m.t_mask), 0}, coeff);
    }
    return out;
}

std::string monomial_to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const std::string& s) {
        if (!first) os << '*';
        os << s;
        first = false;
    };
    if (m.q == 1) put("q");
    else if (m.q > 1) put("q^" + std::to_string(m.q));
    if (m.p == 1) put("p");
    else if (m.p > 1) put("p^" + std::to_string(m.p));
    std::uint64_t mask = m.t_mask;
    while (mask) {
        const int v = std::countr_zero(mask) + 1;
        mask &= mask - 1;
        put("t" + std::to_string(v));
    }
    if (first) os << '1';
    return os.str();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        if (!first) os << (coeff < 0 ? " - " : " + ");
        else if (coeff < 0) os << "-";
        first = false;
        const std::int64_t a = coeff < 0 ? -coeff : coeff;
        const std::string mono = monomial_to_string(m);
        if (mono == "1") os << a;
        else if (a == 1) os << mono;
        else os << a << '*' << mono;
    }
    return os.str();
}

MultiPoly q_int(int k) {
    if (k < 1) throw std::invalid_argument("q-integer requires k >= 1");
    MultiPoly out;
    for (int e = 0; e < k; ++e) out.add_term(Monomial{e, 0, 0}, 1);
    return out;
}

std::optional<PolyDifference> poly_diff(const MultiPoly& a, const MultiPoly& b) {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            return PolyDifference{ia->first, ia->second, 0};
        }
        if (ia == ea || ib->first < ia->first) {
            return PolyDifference{ib->first, 0, ib->second};
        }
        if (ia->second != ib->second) {
            return PolyDifference{ia->first, ia->second, ib->second};
        }
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

bool poly_equal(const MultiPoly& a, const MultiPoly& b) { return !poly_diff(a, b).has_value(); }

}  // namespace forestlab
