#include "forestlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forestlab/codes.hpp"
#include "forestlab/genfun.hpp"
#include "forestlab/multipoly.hpp"
#include "forestlab/statistics.hpp"

namespace forestlab {

namespace {

std::string coeff_mismatch(const PolyDifference& d) {
    return "coefficient differs at " + monomial_to_string(d.monomial) + " (" +
           std::to_string(d.lhs_coeff) + " vs " + std::to_string(d.rhs_coeff) + ")";
}

std::optional<std::string> expect_equal(const MultiPoly& lhs, const MultiPoly& rhs,
                                        const std::string& what) {
    if (auto d = poly_diff(lhs, rhs)) return what + ": " + coeff_mismatch(*d);
    return std::nullopt;
}

std::string vec_csv(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::vector<int> zero_positions(const CodeSeq& code) {
    std::vector<int> out;
    for (std::size_t i = 0; i < code.entries.size(); ++i)
        if (code.entries[i] == 0) out.push_back(static_cast<int>(i) + 1);
    return out;
}

int entry_sum(const CodeSeq& code) {
    int s = 0;
    for (int e : code.entries) s += e;
    return s;
}

// Per-labeling check helper: stops at the first failing labeling.
template <class Check>
std::optional<std::string> scan_labelings(const Forest& f, LabelClass cls, Check&& check) {
    std::optional<std::string> failure;
    for_each_labeling(f, cls, [&](const Labeling& w) {
        if (failure) return;
        if (auto msg = check(w)) failure = "labeling " + w.to_string() + ": " + *msg;
    });
    return failure;
}

std::uint64_t code_space_size(const Forest& f, CodeBound bound) {
    std::uint64_t total = 1;
    for (int v = 1; v <= f.size(); ++v) {
        const int h = f.subtree_size(v);
        total = checked_mul_u64(total, static_cast<std::uint64_t>(bound == CodeBound::A ? h : 2 * h));
    }
    return total;
}

std::optional<std::string> check_mahonian_unsigned(const Forest& f) {
    const MultiPoly inv_dist = distribution(f, LabelClass::Unsigned, StatPair::Inv);
    const MultiPoly maj_dist = distribution(f, LabelClass::Unsigned, StatPair::Maj);
    const MultiPoly rhs = product_formula(f, Family::MahonianUnsigned);
    if (auto m = expect_equal(inv_dist, maj_dist, "q^inv vs q^maj")) return m;
    return expect_equal(inv_dist, rhs, "q^inv vs hook product");
}

std::optional<std::string> check_mahonian_signed(const Forest& f) {
    const MultiPoly fmaj_dist = distribution(f, LabelClass::Signed, StatPair::FMaj);
    const MultiPoly rmaj_dist = distribution(f, LabelClass::Signed, StatPair::RMaj);
    const MultiPoly invb_dist = distribution(f, LabelClass::Signed, StatPair::InvB);
    const MultiPoly rhs = product_formula(f, Family::MahonianSigned);
    if (auto m = expect_equal(fmaj_dist, rmaj_dist, "q^fmaj vs q^rmaj")) return m;
    if (auto m = expect_equal(fmaj_dist, invb_dist, "q^fmaj vs q^inv_B")) return m;
    return expect_equal(invb_dist, rhs, "q^inv_B vs hook product");
}

std::optional<std::string> check_inv_btmax(const Forest& f) {
    return expect_equal(distribution(f, LabelClass::Unsigned, StatPair::InvBtmax),
                        product_formula(f, Family::InvBtmaxUnsigned), "(inv, Btmax)");
}

std::optional<std::string> check_sor_cyc(const Forest& f) {
    return expect_equal(distribution(f, LabelClass::Unsigned, StatPair::SorCyc),
                        product_formula(f, Family::InvBtmaxUnsigned), "(sor, Cyc)");
}

std::optional<std::string> check_maj_cbtmax(const Forest& f) {
    return expect_equal(distribution(f, LabelClass::Unsigned, StatPair::MajCbtmax),
                        product_formula(f, Family::InvBtmaxUnsigned), "(maj, Cbtmax)");
}

std::optional<std::string> check_invb_btmaxb(const Forest& f) {
    const MultiPoly dist = distribution(f, LabelClass::Signed, StatPair::InvBBtmaxBWithN1);
    if (auto m = expect_equal(dist, product_formula(f, Family::InvBtmaxSignedWithN1),
                              "(n_1, inv_B, Btmax_B)"))
        return m;
    // t := 1 collapses the pair to the signed Mahonian refinement by n_1.
    std::uint64_t all_t = f.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.size()) - 1;
    return expect_equal(dist.substitute_t_one(all_t), product_formula(f, Family::MahonianSignedWithN1),
                        "p^n_1 q^inv_B");
}

std::optional<std::string> check_sorb_cycb(const Forest& f) {
    return expect_equal(distribution(f, LabelClass::Signed, StatPair::SorBCycB),
                        product_formula(f, Family::InvBtmaxSigned), "(sor_B, Cyc_B)");
}

std::optional<std::string> check_invb_specializations(const Forest& f) {
    const MultiPoly dist = distribution(f, LabelClass::Signed, StatPair::InvBBtmaxBWithN1);
    if (auto m = expect_equal(dist.substitute_p(0),
                              distribution(f, LabelClass::Unsigned, StatPair::InvBtmax),
                              "p=0 vs unsigned enumeration"))
        return m;
    if (auto m = expect_equal(dist.substitute_p(0), product_formula(f, Family::InvBtmaxUnsigned),
                              "p=0 vs unsigned hook product"))
        return m;
    return expect_equal(dist.substitute_p(1), product_formula(f, Family::InvBtmaxSigned),
                        "p=1 vs signed hook product");
}

std::optional<std::string> check_invd_btmaxd(const Forest& f) {
    return expect_equal(distribution(f, LabelClass::EvenSigned, StatPair::InvDBtmaxD),
                        product_formula(f, Family::InvBtmaxEvenSigned), "(inv_D, Btmax_D)");
}

std::optional<std::string> check_code_sums(const Forest& f) {
    return scan_labelings(f, LabelClass::Signed, [&](const Labeling& w) -> std::optional<std::string> {
        const SortResult sorted = sort_forest(f, w);
        if (entry_sum(a_code(f, w)) != inv_b(f, w)) return "A-code sum != inv_B";
        if (entry_sum(sorted.bcode) != sorted.sor_b) return "B-code sum != sor_B";
        if (entry_sum(m_code_signed(f, w)) != fmaj(f, w)) return "signed M-code sum != fmaj";
        if (w.all_positive() && entry_sum(m_code(f, w)) != des_maj(f, w).maj)
            return "M-code sum != maj";
        return std::nullopt;
    });
}

std::optional<std::string> check_code_zeros(const Forest& f) {
    return scan_labelings(f, LabelClass::Signed, [&](const Labeling& w) -> std::optional<std::string> {
        if (zero_positions(a_code(f, w)) != btmax(f, w, Variant::B))
            return "A-code zeros != Btmax_B";
        if (zero_positions(sort_forest(f, w).bcode) != cyc_vertices(f, w, Variant::B))
            return "B-code zeros != Cyc_B";
        if (zero_positions(m_code_signed(f, w)) != cbtmax(f, w, Variant::B))
            return "signed M-code zeros != Cbtmax_B";
        if (w.all_positive() && zero_positions(m_code(f, w)) != cbtmax(f, w, Variant::A))
            return "M-code zeros != Cbtmax";
        return std::nullopt;
    });
}

std::optional<std::string> check_code_bounds(const Forest& f) {
    return scan_labelings(f, LabelClass::Signed, [&](const Labeling& w) -> std::optional<std::string> {
        const CodeSeq a = a_code(f, w);
        if (!a.in_bounds(f)) return "A-code outside SE^B";
        for (int i = 1; i <= f.size(); ++i) {
            const bool high = a.entries[i - 1] >= f.subtree_size(i);
            if (high != (w[i] < 0)) return "a_i >= h_i does not match sign of w(v_i)";
        }
        const CodeSeq b = sort_forest(f, w).bcode;
        if (!b.in_bounds(f)) return "B-code outside SE^B";
        bool all_low = true;
        for (int i = 1; i <= f.size(); ++i) all_low &= b.entries[i - 1] < f.subtree_size(i);
        if (all_low != w.all_positive()) return "B-code A-boundedness does not match unsignedness";
        if (!m_code_signed(f, w).in_bounds(f)) return "signed M-code outside SE^B";
        if (w.all_positive() && !m_code(f, w).in_bounds(f)) return "M-code outside SE";
        return std::nullopt;
    });
}

// Shared shape of the three bijection checks: exact round trips plus fiber
// counting over the whole domain.
std::optional<std::string> check_bijection(
    const Forest& f, LabelClass cls, CodeBound bound,
    const std::function<CodedLabeling(const Labeling&)>& forward,
    const std::function<Labeling(const Labeling&, const CodeSeq&)>& backward) {
    const std::uint64_t fiber = f.natural_labeling_count();
    std::map<std::vector<int>, std::uint64_t> fibers;
    std::optional<std::string> failure;
    for_each_labeling(f, cls, [&](const Labeling& w) {
        if (failure) return;
        CodedLabeling coded = forward(w);
        if (!coded.natural.is_natural(f)) {
            failure = "labeling " + w.to_string() + ": image labeling is not natural";
            return;
        }
        if (!coded.code.in_bounds(f)) {
            failure = "labeling " + w.to_string() + ": code out of bounds";
            return;
        }
        if (coded.code.bound != bound) {
            failure = "labeling " + w.to_string() + ": unexpected code kind";
            return;
        }
        const Labeling back = backward(coded.natural, coded.code);
        if (back != w) {
            failure = "labeling " + w.to_string() + ": round trip gave " + back.to_string();
            return;
        }
        ++fibers[coded.code.entries];
    });
    if (failure) return failure;
    for (const auto& [entries, count] : fibers)
        if (count != fiber)
            return "code " + vec_csv(entries) + " attained by " + std::to_string(count) +
                   " labelings, expected " + std::to_string(fiber);
    if (fibers.size() != code_space_size(f, bound))
        return "attained codes " + std::to_string(fibers.size()) + " != code space " +
               std::to_string(code_space_size(f, bound));
    return std::nullopt;
}

std::optional<std::string> check_phi_bijection(const Forest& f) {
    auto failure = check_bijection(
        f, LabelClass::Signed, CodeBound::B, [&](const Labeling& w) { return phi(f, w); },
        [&](const Labeling& nat, const CodeSeq& code) { return phi_inv(f, nat, code); });
    if (failure) return failure;
    // The other direction: every (natural, code) pair decodes to a labeling
    // with that A-code; counting above already forces surjectivity.
    return std::nullopt;
}

std::optional<std::string> check_psi_bijection(const Forest& f) {
    auto failure = check_bijection(
        f, LabelClass::Signed, CodeBound::B, [&](const Labeling& w) { return psi(f, w); },
        [&](const Labeling& nat, const CodeSeq& code) { return psi_inv(f, nat, code); });
    if (failure) return failure;
    // Restricted to unsigned labelings the image is exactly the A-bounded
    // sequences; re-run the count there.
    std::map<std::vector<int>, std::uint64_t> fibers;
    std::optional<std::string> sub;
    for_each_labeling(f, LabelClass::Unsigned, [&](const Labeling& w) {
        if (sub) return;
        const CodedLabeling coded = psi(f, w);
        for (int i = 1; i <= f.size(); ++i)
            if (coded.code.entries[i - 1] >= f.subtree_size(i)) {
                sub = "labeling " + w.to_string() + ": unsigned B-code not A-bounded";
                return;
            }
        ++fibers[coded.code.entries];
    });
    if (sub) return sub;
    for (const auto& [entries, count] : fibers)
        if (count != f.natural_labeling_count())
            return "unsigned restriction: code " + vec_csv(entries) + " attained by " +
                   std::to_string(count) + " labelings";
    if (fibers.size() != code_space_size(f, CodeBound::A))
        return "unsigned restriction misses part of SE_F";
    return std::nullopt;
}

std::optional<std::string> check_theta_bijection(const Forest& f) {
    return check_bijection(
        f, LabelClass::Unsigned, CodeBound::A, [&](const Labeling& w) { return theta(f, w); },
        [&](const Labeling& nat, const CodeSeq& code) { return theta_inv(f, nat, code); });
}

std::optional<std::string> check_inv_to_maj(const Forest& f) {
    std::set<std::vector<int>> image;
    auto failure =
        scan_labelings(f, LabelClass::Unsigned, [&](const Labeling& w) -> std::optional<std::string> {
            const Labeling r = inv_to_maj_map(f, w);
            if (des_maj(f, r).maj != inv(f, w)) return "maj of image != inv";
            if (cbtmax(f, r, Variant::A) != btmax(f, w, Variant::A))
                return "Cbtmax of image != Btmax";
            image.insert(r.values());
            return std::nullopt;
        });
    if (failure) return failure;
    if (image.size() != checked_factorial(f.size()))
        return "map is not a bijection: image has " + std::to_string(image.size()) + " labelings";
    return std::nullopt;
}

std::optional<std::string> check_stat_consistency(const Forest& f) {
    return scan_labelings(f, LabelClass::Signed, [&](const Labeling& w) -> std::optional<std::string> {
        if (w.positive_count() + w.negative_count() != f.size()) return "p + n_1 != n";
        if (inv_b(f, w) != inv(f, w) + w.negative_count() + n_two(f, w))
            return "inv_B != inv + n_1 + n_2";
        if (w.is_even_signed() && inv_d(f, w) != inv_b(f, w) - w.negative_count())
            return "inv_D != inv_B - n_1";
        if (fmaj(f, w) != 2 * des_maj(f, w).maj + w.negative_count())
            return "fmaj != 2 maj + n_1";
        const SignedDescentInfo sb = des_b_maj_b(f, w);
        if (rmaj(f, w) != 2 * sb.maj_b - sb.positive_count) return "rmaj != 2 maj_B - p";
        if (w.all_positive()) {
            if (inv_b(f, w) != inv(f, w)) return "unsigned: inv_B != inv";
            if (btmax(f, w, Variant::B) != btmax(f, w, Variant::A))
                return "unsigned: Btmax_B != Btmax";
            if (cbtmax(f, w, Variant::B) != cbtmax(f, w, Variant::A))
                return "unsigned: Cbtmax_B != Cbtmax";
            if (fmaj(f, w) != 2 * des_maj(f, w).maj) return "unsigned: fmaj != 2 maj";
            const CodeSeq ms = m_code_signed(f, w);
            const CodeSeq m = m_code(f, w);
            for (int i = 0; i < f.size(); ++i)
                if (ms.entries[i] != 2 * m.entries[i])
                    return "unsigned: signed M-code != doubled M-code";
        }
        return std::nullopt;
    });
}

std::optional<std::string> check_cardinality(const Forest& f) {
    const int n = f.size();
    if (distribution(f, LabelClass::Unsigned, StatPair::InvBtmax).evaluate_all_ones() !=
        static_cast<std::int64_t>(labeling_count(n, LabelClass::Unsigned)))
        return "unsigned distribution does not total n!";
    if (distribution(f, LabelClass::Signed, StatPair::InvBBtmaxBWithN1).evaluate_all_ones() !=
        static_cast<std::int64_t>(labeling_count(n, LabelClass::Signed)))
        return "signed distribution does not total 2^n n!";
    if (distribution(f, LabelClass::EvenSigned, StatPair::InvDBtmaxD).evaluate_all_ones() !=
        static_cast<std::int64_t>(labeling_count(n, LabelClass::EvenSigned)))
        return "even-signed distribution does not total 2^(n-1) n!";
    if (static_cast<std::uint64_t>(all_natural_labelings(f).size()) != f.natural_labeling_count())
        return "enumerated natural labelings do not match n!/prod h";
    return std::nullopt;
}

}  // namespace

std::string_view report_status_name(ReportStatus status) {
    switch (status) {
        case ReportStatus::Verified: return "verified";
        case ReportStatus::Failed: return "failed";
        case ReportStatus::CounterexampleFound: return "counterexample_found";
        case ReportStatus::NoneFound: return "none_found";
    }
    return "?";
}

const std::vector<IdentityCheck>& identity_registry() {
    static const std::vector<IdentityCheck> registry = {
        {"mahonian-unsigned", LabelClass::Unsigned, check_mahonian_unsigned},
        {"mahonian-signed", LabelClass::Signed, check_mahonian_signed},
        {"inv-btmax", LabelClass::Unsigned, check_inv_btmax},
        {"sor-cyc", LabelClass::Unsigned, check_sor_cyc},
        {"maj-cbtmax", LabelClass::Unsigned, check_maj_cbtmax},
        {"invb-btmaxb", LabelClass::Signed, check_invb_btmaxb},
        {"sorb-cycb", LabelClass::Signed, check_sorb_cycb},
        {"invb-specializations", LabelClass::Signed, check_invb_specializations},
        {"invd-btmaxd", LabelClass::EvenSigned, check_invd_btmaxd},
        {"code-sums", LabelClass::Signed, check_code_sums},
        {"code-zeros", LabelClass::Signed, check_code_zeros},
        {"code-bounds", LabelClass::Signed, check_code_bounds},
        {"phi-bijection", LabelClass::Signed, check_phi_bijection},
        {"psi-bijection", LabelClass::Signed, check_psi_bijection},
        {"theta-bijection", LabelClass::Unsigned, check_theta_bijection},
        {"inv-to-maj", LabelClass::Unsigned, check_inv_to_maj},
        {"stat-consistency", LabelClass::Signed, check_stat_consistency},
        {"cardinality", LabelClass::Signed, check_cardinality},
    };
    return registry;
}

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& id : identity_registry()) names.push_back(id.name);
    return names;
}

Report run_identity(const IdentityCheck& identity, const Forest& f) {
    Report report;
    report.identity = identity.name;
    report.forest = f.to_string();
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
        failure = identity.check(f);
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure) {
        report.status = ReportStatus::Failed;
        report.witness = *failure;
    }
    return report;
}

std::vector<Report> run_verification(const VerifyOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max_n must be positive");
    std::vector<const IdentityCheck*> selected;
    for (const auto& id : identity_registry()) {
        if (!options.identities.empty() &&
            std::find(options.identities.begin(), options.identities.end(), id.name) ==
                options.identities.end())
            continue;
        if (!options.classes.empty() &&
            std::find(options.classes.begin(), options.classes.end(), id.cls) == options.classes.end())
            continue;
        selected.push_back(&id);
    }
    if (!options.identities.empty() && selected.empty())
        throw std::invalid_argument("no identity matches the selection");

    std::vector<Forest> forests;
    for (int n = 1; n <= options.max_n; ++n)
        for (Forest& f : enumerate_forests(n, true)) forests.push_back(std::move(f));

    std::vector<std::pair<const Forest*, const IdentityCheck*>> tasks;
    for (const Forest& f : forests) {
        for (const IdentityCheck* id : selected) {
            const int cap =
                id->cls == LabelClass::Unsigned ? options.unsigned_max_n : options.signed_max_n;
            if (cap > 0 && f.size() > cap) continue;
            tasks.emplace_back(&f, id);
        }
    }

    std::vector<Report> reports(tasks.size());
    const std::int64_t count = static_cast<std::int64_t>(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (options.parallel)
#endif
    for (std::int64_t k = 0; k < count; ++k)
        reports[static_cast<std::size_t>(k)] =
            run_identity(*tasks[static_cast<std::size_t>(k)].second,
                         *tasks[static_cast<std::size_t>(k)].first);
    return reports;
}

namespace {

struct CounterexampleNameEntry {
    CounterexampleTarget target;
    std::string_view name;
};

constexpr CounterexampleNameEntry kTargetNames[] = {
    {CounterexampleTarget::MajBtmaxVsInvBtmax, "maj-btmax-vs-inv-btmax"},
    {CounterexampleTarget::FmajCbtmaxBVsInvBBtmaxB, "fmaj-cbtmaxb-vs-invb-btmaxb"},
    {CounterexampleTarget::SignedMcodeNotOnto, "signed-mcode-not-onto"},
};

// Joint distribution of a statistic and a partner-set size: q^stat p^(#set).
MultiPoly joint_count_distribution(const Forest& f, LabelClass cls,
                                   const std::function<int(const Labeling&)>& stat,
                                   const std::function<std::size_t(const Labeling&)>& set_size) {
    MultiPoly out;
    for_each_labeling(f, cls, [&](const Labeling& w) {
        out.add_term(Monomial{stat(w), static_cast<int>(set_size(w)), 0}, 1);
    });
    return out;
}

std::optional<std::string> counterexample_witness(CounterexampleTarget target, const Forest& f) {
    switch (target) {
        case CounterexampleTarget::MajBtmaxVsInvBtmax: {
            const MultiPoly lhs = joint_count_distribution(
                f, LabelClass::Unsigned, [&](const Labeling& w) { return des_maj(f, w).maj; },
                [&](const Labeling& w) { return btmax(f, w, Variant::A).size(); });
            const MultiPoly rhs = joint_count_distribution(
                f, LabelClass::Unsigned, [&](const Labeling& w) { return inv(f, w); },
                [&](const Labeling& w) { return btmax(f, w, Variant::A).size(); });
            if (auto d = poly_diff(lhs, rhs))
                return "(maj, #Btmax) vs (inv, #Btmax): " + coeff_mismatch(*d) +
                       " [q = statistic, p = set size]";
            return std::nullopt;
        }
        case CounterexampleTarget::FmajCbtmaxBVsInvBBtmaxB: {
            const MultiPoly lhs = joint_count_distribution(
                f, LabelClass::Signed, [&](const Labeling& w) { return fmaj(f, w); },
                [&](const Labeling& w) { return cbtmax(f, w, Variant::B).size(); });
            const MultiPoly rhs = joint_count_distribution(
                f, LabelClass::Signed, [&](const Labeling& w) { return inv_b(f, w); },
                [&](const Labeling& w) { return btmax(f, w, Variant::B).size(); });
            if (auto d = poly_diff(lhs, rhs))
                return "(fmaj, #Cbtmax_B) vs (inv_B, #Btmax_B): " + coeff_mismatch(*d) +
                       " [q = statistic, p = set size]";
            return std::nullopt;
        }
        case CounterexampleTarget::SignedMcodeNotOnto: {
            std::set<std::vector<int>> attained;
            for_each_labeling(f, LabelClass::Signed, [&](const Labeling& w) {
                attained.insert(m_code_signed(f, w).entries);
            });
            // First B-bounded sequence missing from the image, odometer order.
            std::vector<int> seq(f.size(), 0);
            while (true) {
                if (!attained.count(seq)) return vec_csv(seq);
                int i = f.size() - 1;
                while (i >= 0) {
                    if (++seq[i] <= 2 * f.subtree_size(i + 1) - 1) break;
                    seq[i] = 0;
                    --i;
                }
                if (i < 0) break;
            }
            return std::nullopt;
        }
    }
    throw std::logic_error("unreachable");
}

Report search_counterexample(CounterexampleTarget target, int max_n, bool paths_only) {
    Report report;
    report.identity = std::string(counterexample_target_name(target));
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= max_n && report.status != ReportStatus::CounterexampleFound; ++n) {
        std::vector<Forest> forests;
        if (paths_only)
            forests.push_back(linear_tree(n));
        else
            forests = enumerate_forests(n, true);
        for (const Forest& f : forests) {
            if (auto witness = counterexample_witness(target, f)) {
                report.status = ReportStatus::CounterexampleFound;
                report.forest = f.to_string();
                report.witness = *witness;
                break;
            }
        }
    }
    if (report.status != ReportStatus::CounterexampleFound) {
        report.status = ReportStatus::NoneFound;
        report.witness = "none found up to max_n=" + std::to_string(max_n);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

std::string_view counterexample_target_name(CounterexampleTarget target) {
    for (const auto& e : kTargetNames)
        if (e.target == target) return e.name;
    return "?";
}

CounterexampleTarget counterexample_target_from_name(std::string_view name) {
    for (const auto& e : kTargetNames)
        if (e.name == name) return e.target;
    throw std::invalid_argument("unknown counterexample target '" + std::string(name) + "'");
}

Report find_counterexample(CounterexampleTarget target, int max_n) {
    return search_counterexample(target, max_n, false);
}

Report find_counterexample_on_paths(CounterexampleTarget target, int max_n) {
    return search_counterexample(target, max_n, true);
}

}  // namespace forestlab
