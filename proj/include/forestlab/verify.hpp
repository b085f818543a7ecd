#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"

namespace forestlab {

enum class ReportStatus { Verified, Failed, CounterexampleFound, NoneFound };

struct Report {
    std::string identity;
    std::string forest;  // parent CSV
    ReportStatus status = ReportStatus::Verified;
    std::string witness;  // labeling / exponent vector / sequence; empty when verified
    double seconds = 0.0;
};

std::string_view report_status_name(ReportStatus status);

// One theorem checked exhaustively on a single forest. The checker returns
// a witness description on failure.
struct IdentityCheck {
    std::string name;
    LabelClass cls = LabelClass::Unsigned;
    std::function<std::optional<std::string>(const Forest&)> check;
};

// The full registry: every distribution identity, code lemma, and bijection
// property, each applicable to every forest.
const std::vector<IdentityCheck>& identity_registry();
std::vector<std::string> identity_names();

Report run_identity(const IdentityCheck& identity, const Forest& f);

struct VerifyOptions {
    int max_n = 4;
    // Empty selections mean "all".
    std::vector<std::string> identities;
    std::vector<LabelClass> classes;
    // Optional per-class forest-size caps (0 = uncapped); signed enumeration
    // grows as 2^n n!, so the CLI caps it at 5 by default.
    int unsigned_max_n = 0;
    int signed_max_n = 0;
    bool parallel = true;
};

// Runs every selected identity on every poset-distinct forest with up to
// max_n vertices; one report per applicable (forest, identity) pair, in
// deterministic order regardless of thread count.
std::vector<Report> run_verification(const VerifyOptions& options);

enum class CounterexampleTarget {
    MajBtmaxVsInvBtmax,        // joint (maj, #Btmax) vs (inv, #Btmax) over unsigned labelings
    FmajCbtmaxBVsInvBBtmaxB,   // joint (fmaj, #Cbtmax_B) vs (inv_B, #Btmax_B) over signed labelings
    SignedMcodeNotOnto,        // a B-bounded sequence attained by no signed M-code
};

std::string_view counterexample_target_name(CounterexampleTarget target);
CounterexampleTarget counterexample_target_from_name(std::string_view name);

// Scans forests by size then lexicographic parent array (one representative
// per poset class) and reports the first witness, or NoneFound.
Report find_counterexample(CounterexampleTarget target, int max_n);

// Same search restricted to linear trees.
Report find_counterexample_on_paths(CounterexampleTarget target, int max_n);

}  // namespace forestlab
