#include <doctest.h>

#include <set>

#include "forestlab/codes.hpp"
#include "forestlab/verify.hpp"

using namespace forestlab;

TEST_CASE("identity registry") {
    CHECK(identity_registry().size() == 18);
    std::set<std::string> names;
    for (const std::string& name : identity_names()) names.insert(name);
    CHECK(names.size() == identity_registry().size());
    CHECK(names.count("mahonian-unsigned") == 1);
    CHECK(names.count("phi-bijection") == 1);
}

TEST_CASE("verification passes up to n = 4 with full report coverage") {
    VerifyOptions options;
    options.max_n = 4;
    const std::vector<Report> reports = run_verification(options);
    // 1 + 2 + 4 + 9 poset-distinct forests, every identity on each.
    CHECK(reports.size() == 16 * identity_registry().size());
    for (const Report& r : reports) {
        CHECK(r.status == ReportStatus::Verified);
        CHECK(r.witness.empty());
    }
}

TEST_CASE("identity and class selection") {
    VerifyOptions options;
    options.max_n = 3;
    options.identities = {"mahonian-unsigned", "sorb-cycb"};
    CHECK(run_verification(options).size() == 7 * 2);

    options.identities.clear();
    options.classes = {LabelClass::Unsigned};
    std::size_t unsigned_count = 0;
    for (const IdentityCheck& id : identity_registry())
        unsigned_count += id.cls == LabelClass::Unsigned;
    CHECK(run_verification(options).size() == 7 * unsigned_count);

    options.classes.clear();
    options.identities = {"no-such-identity"};
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
}

TEST_CASE("per-class size caps") {
    VerifyOptions options;
    options.max_n = 4;
    options.signed_max_n = 2;
    std::size_t unsigned_count = 0;
    for (const IdentityCheck& id : identity_registry())
        unsigned_count += id.cls == LabelClass::Unsigned;
    const std::size_t signed_count = identity_registry().size() - unsigned_count;
    CHECK(run_verification(options).size() == 16 * unsigned_count + 3 * signed_count);
}

TEST_CASE("a corrupted check fails with a witness") {
    // Harness self-test: a deliberately wrong identity must surface as a
    // failed report carrying the offending labeling.
    const IdentityCheck corrupted{
        "corrupted", LabelClass::Unsigned, [](const Forest& f) -> std::optional<std::string> {
            std::optional<std::string> witness;
            for_each_labeling(f, LabelClass::Unsigned, [&](const Labeling& w) {
                if (!witness && inv(f, w) + 1 != inv(f, w)) witness = "labeling " + w.to_string();
            });
            return witness;
        }};
    const Report report = run_identity(corrupted, linear_tree(3));
    CHECK(report.status == ReportStatus::Failed);
    CHECK(report.witness == "labeling 1,2,3");

    const IdentityCheck throwing{"throwing", LabelClass::Unsigned,
                                 [](const Forest&) -> std::optional<std::string> {
                                     throw std::runtime_error("boom");
                                 }};
    const Report thrown = run_identity(throwing, linear_tree(2));
    CHECK(thrown.status == ReportStatus::Failed);
    CHECK(thrown.witness == "exception: boom");
}

TEST_CASE("counterexample: signed M-code misses part of its bound space") {
    const Report r = find_counterexample(CounterexampleTarget::SignedMcodeNotOnto, 4);
    REQUIRE(r.status == ReportStatus::CounterexampleFound);
    CHECK(r.forest == "2,0");  // the smallest witness is the 2-chain

    // Recheck the witness: the sequence is B-bounded yet never attained.
    const Forest f = Forest::parse(r.forest);
    const CodeSeq missing = parse_code(f, r.witness, CodeBound::B);
    for_each_labeling(f, LabelClass::Signed, [&](const Labeling& w) {
        CHECK(m_code_signed(f, w).entries != missing.entries);
    });
}

TEST_CASE("counterexample: (maj, #Btmax) deviates from (inv, #Btmax) on some forest") {
    const Report r = find_counterexample(CounterexampleTarget::MajBtmaxVsInvBtmax, 5);
    REQUIRE(r.status == ReportStatus::CounterexampleFound);
    // Smallest witness is the 3-chain: the word 312 realizes
    // (maj, #Btmax) = (1, 1) but no word realizes (inv, #Btmax) = (1, 1).
    CHECK(r.forest == "2,3,0");
    CHECK(r.witness.find("coefficient differs") != std::string::npos);

    // The 3-chain is itself a path, so the path-restricted sweep finds it
    // too: Btmax mirrors right-to-left minima of the inverse permutation,
    // which interacts differently with maj than with inv.
    const Report paths = find_counterexample_on_paths(CounterexampleTarget::MajBtmaxVsInvBtmax, 5);
    CHECK(paths.status == ReportStatus::CounterexampleFound);
    CHECK(paths.forest == "2,3,0");

    // The 2-chain and smaller forests do not separate the pairs.
    CHECK(find_counterexample(CounterexampleTarget::MajBtmaxVsInvBtmax, 2).status ==
          ReportStatus::NoneFound);
}

TEST_CASE("counterexample: (fmaj, #Cbtmax_B) deviates from (inv_B, #Btmax_B)") {
    const Report r = find_counterexample(CounterexampleTarget::FmajCbtmaxBVsInvBBtmaxB, 5);
    REQUIRE(r.status == ReportStatus::CounterexampleFound);
    CHECK_FALSE(r.forest.empty());
}

TEST_CASE("counterexample target names round-trip") {
    for (CounterexampleTarget t :
         {CounterexampleTarget::MajBtmaxVsInvBtmax, CounterexampleTarget::FmajCbtmaxBVsInvBBtmaxB,
          CounterexampleTarget::SignedMcodeNotOnto})
        CHECK(counterexample_target_from_name(counterexample_target_name(t)) == t);
    CHECK_THROWS_AS(counterexample_target_from_name("nope"), std::invalid_argument);
}
