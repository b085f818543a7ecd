#include <doctest.h>

#include "forestlab/genfun.hpp"
#include "forestlab/verify.hpp"

using namespace forestlab;

// The OpenMP kernels must reproduce the serial reference exactly: integer
// accumulation is order-independent, so any difference is a bug.

TEST_CASE("parallel distribution equals the serial reference") {
    const std::vector<Forest> forests = {
        linear_tree(5),
        Forest::from_parents({3, 3, 5, 5, 0}),
        Forest::from_parents({5, 5, 5, 5, 0}),
        Forest::from_parents({0, 0, 5, 5, 0}),
    };
    const std::vector<std::pair<LabelClass, StatPair>> cases = {
        {LabelClass::Unsigned, StatPair::Inv},
        {LabelClass::Unsigned, StatPair::InvBtmax},
        {LabelClass::Unsigned, StatPair::SorCyc},
        {LabelClass::Unsigned, StatPair::MajCbtmax},
        {LabelClass::Signed, StatPair::InvBBtmaxBWithN1},
        {LabelClass::Signed, StatPair::SorBCycB},
        {LabelClass::Signed, StatPair::RMaj},
        {LabelClass::EvenSigned, StatPair::InvDBtmaxD},
    };
    for (const Forest& f : forests) {
        for (const auto& [cls, pair] : cases) {
            const MultiPoly serial = distribution_serial(f, cls, pair);
            const MultiPoly parallel = distribution_parallel(f, cls, pair);
            const auto diff = poly_diff(serial, parallel);
            CHECK_FALSE(diff.has_value());
        }
    }
}

TEST_CASE("dispatching wrapper agrees with both kernels") {
    const Forest f = linear_tree(6);
    CHECK(poly_equal(distribution(f, LabelClass::Signed, StatPair::InvB),
                     distribution_serial(f, LabelClass::Signed, StatPair::InvB)));
}

TEST_CASE("parallel verification yields the same reports as serial") {
    VerifyOptions serial_options;
    serial_options.max_n = 3;
    serial_options.parallel = false;
    VerifyOptions parallel_options = serial_options;
    parallel_options.parallel = true;

    const std::vector<Report> a = run_verification(serial_options);
    const std::vector<Report> b = run_verification(parallel_options);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity == b[i].identity);
        CHECK(a[i].forest == b[i].forest);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].witness == b[i].witness);
    }
}
