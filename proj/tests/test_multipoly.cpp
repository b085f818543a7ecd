#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "forestlab/multipoly.hpp"

using namespace forestlab;

TEST_CASE("q-integers") {
    CHECK(q_int(1) == MultiPoly::constant(1));
    CHECK(q_int(3) == MultiPoly::constant(1) + MultiPoly::q() + MultiPoly::q(2));
    CHECK(q_int(4) == MultiPoly::constant(1) + MultiPoly::q() + MultiPoly::q(2) + MultiPoly::q(3));
    CHECK_THROWS_AS(q_int(0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    const MultiPoly one_plus_q = MultiPoly::constant(1) + MultiPoly::q();
    CHECK((one_plus_q * one_plus_q).to_string() == "1 + 2*q + q^2");
    CHECK((one_plus_q - one_plus_q).is_zero());
    CHECK((MultiPoly::t(1) * MultiPoly::t(3)).to_string() == "t1*t3");
    CHECK_THROWS_AS(MultiPoly::t(2) * MultiPoly::t(2), std::domain_error);
    CHECK(one_plus_q.scaled(3).to_string() == "3 + 3*q");
    CHECK(one_plus_q.scaled(0).is_zero());
    CHECK(one_plus_q.scaled(4).divided_exact(2).to_string() == "2 + 2*q");
    CHECK_THROWS_AS(one_plus_q.divided_exact(2), std::domain_error);
    CHECK_THROWS_AS(one_plus_q.divided_exact(0), std::domain_error);
}

TEST_CASE("substitutions and evaluation") {
    // (1 + p q) (q + t2)
    const MultiPoly poly = (MultiPoly::constant(1) + MultiPoly::p() * MultiPoly::q()) *
                           (MultiPoly::q() + MultiPoly::t(2));
    CHECK(poly.substitute_p(0) == MultiPoly::q() + MultiPoly::t(2));
    CHECK(poly.substitute_p(1) ==
          MultiPoly::q() + MultiPoly::t(2) + MultiPoly::q(2) + MultiPoly::q() * MultiPoly::t(2));
    CHECK(poly.evaluate_all_ones() == 4);
    CHECK(poly.substitute_t_one(~std::uint64_t{0}).substitute_p(1).to_string() == "1 + 2*q + q^2");
    CHECK((MultiPoly::q() * MultiPoly::t(1) * MultiPoly::t(4)).collapse_t_to_count() ==
          MultiPoly::q() * MultiPoly::p(2));
    CHECK_THROWS_AS((MultiPoly::p() * MultiPoly::t(1)).collapse_t_to_count(), std::domain_error);
}

TEST_CASE("canonical text") {
    CHECK(MultiPoly::zero().to_string() == "0");
    CHECK(MultiPoly::constant(-3).to_string() == "-3");
    const MultiPoly poly = MultiPoly::monomial(Monomial{1, 0, 0b1011}, 8) +
                           MultiPoly::constant(2) - MultiPoly::q(2);
    CHECK(poly.to_string() == "2 + 8*q*t1*t2*t4 - q^2");
    CHECK(monomial_to_string(Monomial{}) == "1");
    CHECK(monomial_to_string(Monomial{2, 1, 0b100}) == "q^2*p*t3");
}

TEST_CASE("equality with first-difference witness") {
    const MultiPoly a = MultiPoly::constant(1) + MultiPoly::q();
    CHECK(poly_equal(a, a));
    CHECK_FALSE(poly_diff(a, a).has_value());

    const MultiPoly b = MultiPoly::constant(1) + MultiPoly::q(2);
    const auto diff = poly_diff(a, b);
    REQUIRE(diff.has_value());
    CHECK(diff->monomial == Monomial{1, 0, 0});
    CHECK(diff->lhs_coeff == 1);
    CHECK(diff->rhs_coeff == 0);

    const auto diff2 = poly_diff(a, a + MultiPoly::q().scaled(2));
    REQUIRE(diff2.has_value());
    CHECK(diff2->monomial == Monomial{1, 0, 0});
    CHECK(diff2->lhs_coeff == 1);
    CHECK(diff2->rhs_coeff == 3);
}

TEST_CASE("overflow detection") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
    CHECK_THROWS_AS(MultiPoly::constant(big).scaled(2), std::overflow_error);
    CHECK_THROWS_AS(MultiPoly::constant(big) + MultiPoly::constant(big), std::overflow_error);
    CHECK_THROWS_AS(checked_mul_i64(big, 4), std::overflow_error);
    CHECK(checked_add_i64(2, 3) == 5);
}
