#include "forestlab/genfun.hpp"

#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "forestlab/codes.hpp"
#include "forestlab/statistics.hpp"

namespace forestlab {

namespace {

struct PairNameEntry {
    StatPair pair;
    std::string_view name;
};

constexpr PairNameEntry kPairNames[] = {
    {StatPair::Inv, "inv"},
    {StatPair::Maj, "maj"},
    {StatPair::FMaj, "fmaj"},
    {StatPair::RMaj, "rmaj"},
    {StatPair::InvB, "inv-b"},
    {StatPair::InvBtmax, "inv-btmax"},
    {StatPair::SorCyc, "sor-cyc"},
    {StatPair::MajCbtmax, "maj-cbtmax"},
    {StatPair::InvBBtmaxB, "invb-btmaxb"},
    {StatPair::InvBBtmaxBWithN1, "invb-btmaxb-n1"},
    {StatPair::SorBCycB, "sorb-cycb"},
    {StatPair::InvDBtmaxD, "invd-btmaxd"},
};

std::uint64_t vertex_set_mask(const std::vector<int>& vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << (v - 1);
    return m;
}

Monomial labeling_monomial(const Forest& f, const Labeling& w, StatPair pair) {
    switch (pair) {
        case StatPair::Inv: return {inv(f, w), 0, 0};
        case StatPair::Maj: return {des_maj(f, w).maj, 0, 0};
        case StatPair::FMaj: return {fmaj(f, w), 0, 0};
        case StatPair::RMaj: return {rmaj(f, w), 0, 0};
        case StatPair::InvB: return {inv_b(f, w), 0, 0};
        case StatPair::InvBtmax: return {inv(f, w), 0, vertex_set_mask(btmax(f, w, Variant::A))};
        case StatPair::SorCyc: return {sor(f, w), 0, vertex_set_mask(cyc_vertices(f, w, Variant::A))};
        case StatPair::MajCbtmax:
            return {des_maj(f, w).maj, 0, vertex_set_mask(cbtmax(f, w, Variant::A))};
        case StatPair::InvBBtmaxB: return {inv_b(f, w), 0, vertex_set_mask(btmax(f, w, Variant::B))};
        case StatPair::InvBBtmaxBWithN1:
            return {inv_b(f, w), w.negative_count(), vertex_set_mask(btmax(f, w, Variant::B))};
        case StatPair::SorBCycB:
            return {sor_b(f, w), 0, vertex_set_mask(cyc_vertices(f, w, Variant::B))};
        case StatPair::InvDBtmaxD:
            return {inv_d(f, w), 0, vertex_set_mask(btmax(f, w, Variant::D))};
    }
    throw std::logic_error("unreachable");
}

void check_pair_class(StatPair pair, LabelClass cls) {
    if (stat_pair_class(pair) != cls)
        throw std::domain_error(std::string("statistic pair '") + std::string(stat_pair_name(pair)) +
                                "' is defined over " + std::string(label_class_name(stat_pair_class(pair))) +
                                " labelings, not " + std::string(label_class_name(cls)));
}

}  // namespace

std::string_view stat_pair_name(StatPair pair) {
    for (const auto& e : kPairNames)
        if (e.pair == pair) return e.name;
    return "?";
}

StatPair stat_pair_from_name(std::string_view name) {
    for (const auto& e : kPairNames)
        if (e.name == name) return e.pair;
    throw std::invalid_argument("unknown statistic pair '" + std::string(name) + "'");
}

LabelClass stat_pair_class(StatPair pair) {
    switch (pair) {
        case StatPair::Inv:
        case StatPair::Maj:
        case StatPair::InvBtmax:
        case StatPair::SorCyc:
        case StatPair::MajCbtmax: return LabelClass::Unsigned;
        case StatPair::FMaj:
        case StatPair::RMaj:
        case StatPair::InvB:
        case StatPair::InvBBtmaxB:
        case StatPair::InvBBtmaxBWithN1:
        case StatPair::SorBCycB: return LabelClass::Signed;
        case StatPair::InvDBtmaxD: return LabelClass::EvenSigned;
    }
    throw std::logic_error("unreachable");
}

MultiPoly distribution_serial(const Forest& f, LabelClass cls, StatPair pair, std::uint64_t cap) {
    check_pair_class(pair, cls);
    MultiPoly out;
    for_each_labeling(
        f, cls, [&](const Labeling& w) { out.add_term(labeling_monomial(f, w, pair), 1); }, cap);
    return out;
}

MultiPoly distribution_parallel(const Forest& f, LabelClass cls, StatPair pair, std::uint64_t cap) {
    check_pair_class(pair, cls);
    check_enumeration_bound(f.size(), cls, cap);
    const int n = f.size();
    const std::uint64_t perms = checked_factorial(n);
    const std::uint64_t masks = cls == LabelClass::Unsigned ? 1 : (std::uint64_t{1} << n);
    MultiPoly out;
#ifdef _OPENMP
#pragma omp parallel
    {
        MultiPoly local;
        std::vector<int> vals(n);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(perms); ++rank) {
            const std::vector<int> perm = permutation_at(n, static_cast<std::uint64_t>(rank));
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                if (cls == LabelClass::EvenSigned && (std::popcount(mask) & 1)) continue;
                for (int i = 0; i < n; ++i)
                    vals[i] = (mask >> i) & 1 ? -perm[i] : perm[i];
                local.add_term(labeling_monomial(f, Labeling::of(vals), pair), 1);
            }
        }
#pragma omp critical(forestlab_distribution_merge)
        out += local;
    }
#else
    out = distribution_serial(f, cls, pair, cap);
#endif
    return out;
}

MultiPoly distribution(const Forest& f, LabelClass cls, StatPair pair, std::uint64_t cap) {
    check_enumeration_bound(f.size(), cls, cap);
#ifdef _OPENMP
    // The parallel kernel pays off once the class has some bulk.
    if (labeling_count(f.size(), cls) >= 40'000 && omp_get_max_threads() > 1)
        return distribution_parallel(f, cls, pair, cap);
#endif
    return distribution_serial(f, cls, pair, cap);
}

namespace {

struct FamilyNameEntry {
    Family family;
    std::string_view name;
};

constexpr FamilyNameEntry kFamilyNames[] = {
    {Family::MahonianUnsigned, "mahonian-unsigned"},
    {Family::MahonianSigned, "mahonian-signed"},
    {Family::MahonianSignedWithN1, "mahonian-signed-n1"},
    {Family::InvBtmaxUnsigned, "inv-btmax-unsigned"},
    {Family::InvBtmaxSigned, "inv-btmax-signed"},
    {Family::InvBtmaxSignedWithN1, "inv-btmax-signed-n1"},
    {Family::InvBtmaxEvenSigned, "inv-btmax-even-signed"},
};

}  // namespace

std::string_view family_name(Family family) {
    for (const auto& e : kFamilyNames)
        if (e.family == family) return e.name;
    return "?";
}

Family family_from_name(std::string_view name) {
    for (const auto& e : kFamilyNames)
        if (e.name == name) return e.family;
    throw std::invalid_argument("unknown formula family '" + std::string(name) + "'");
}

MultiPoly product_formula(const Forest& f, Family family) {
    const std::int64_t prefactor = static_cast<std::int64_t>(f.natural_labeling_count());
    const MultiPoly one = MultiPoly::constant(1);

    if (family == Family::InvBtmaxEvenSigned) {
        // Built through the p = +-1 averaging identity: track p^(n_1) with
        // exponents shifted by one q (inv_D = inv_B - n_1), set t_v = 1 at
        // leaves, evaluate at p = 1 and halve. Leaves contribute (1 + p).
        MultiPoly prod = one;
        for (int v = 1; v <= f.size(); ++v) {
            const int h = f.subtree_size(v);
            MultiPoly factor =
                (one + MultiPoly::monomial(Monomial{h - 1, 1, 0}, 1)) * q_int(h) - one;
            if (f.is_leaf(v))
                factor += one;  // t_v := 1
            else
                factor += MultiPoly::t(v);
            prod *= factor;
        }
        return prod.substitute_p(1).scaled(prefactor).divided_exact(2);
    }

    MultiPoly prod = one;
    for (int v = 1; v <= f.size(); ++v) {
        const int h = f.subtree_size(v);
        MultiPoly factor;
        switch (family) {
            case Family::MahonianUnsigned: factor = q_int(h); break;
            case Family::MahonianSigned: factor = q_int(2 * h); break;
            case Family::MahonianSignedWithN1:
                factor = (one + MultiPoly::monomial(Monomial{h, 1, 0}, 1)) * q_int(h);
                break;
            case Family::InvBtmaxUnsigned: factor = q_int(h) - one + MultiPoly::t(v); break;
            case Family::InvBtmaxSigned: factor = q_int(2 * h) - one + MultiPoly::t(v); break;
            case Family::InvBtmaxSignedWithN1:
                factor = (one + MultiPoly::monomial(Monomial{h, 1, 0}, 1)) * q_int(h) - one +
                         MultiPoly::t(v);
                break;
            case Family::InvBtmaxEvenSigned: break;  // handled above
        }
        prod *= factor;
    }
    return prod.scaled(prefactor);
}

}  // namespace forestlab
