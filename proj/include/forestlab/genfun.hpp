#pragma once

#include <string>
#include <string_view>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"
#include "forestlab/multipoly.hpp"

namespace forestlab {

// Distribution polynomials computed by exhaustive enumeration: the sum over
// the labeling class of q^(statistic), optionally times p^(n_1) and times
// t_v over a set-valued partner statistic.
enum class StatPair {
    Inv,              // q^inv over unsigned labelings
    Maj,              // q^maj over unsigned labelings
    FMaj,             // q^fmaj over signed labelings
    RMaj,             // q^rmaj over signed labelings
    InvB,             // q^inv_B over signed labelings
    InvBtmax,         // q^inv prod t_(Btmax), unsigned
    SorCyc,           // q^sor prod t_(Cyc), unsigned
    MajCbtmax,        // q^maj prod t_(Cbtmax), unsigned
    InvBBtmaxB,       // q^inv_B prod t_(Btmax_B), signed
    InvBBtmaxBWithN1, // p^n_1 q^inv_B prod t_(Btmax_B), signed
    SorBCycB,         // q^sor_B prod t_(Cyc_B), signed
    InvDBtmaxD,       // q^inv_D prod t_(Btmax_D), even-signed
};

std::string_view stat_pair_name(StatPair pair);
StatPair stat_pair_from_name(std::string_view name);

// The labeling class a pair is defined over.
LabelClass stat_pair_class(StatPair pair);

// Serial reference implementation.
MultiPoly distribution_serial(const Forest& f, LabelClass cls, StatPair pair,
                              std::uint64_t cap = kDefaultEnumerationCap);

// OpenMP kernel partitioned over permutation ranks; exact integer merge, so
// the result is identical to the serial one.
MultiPoly distribution_parallel(const Forest& f, LabelClass cls, StatPair pair,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Dispatches to the parallel kernel for large enumerations.
MultiPoly distribution(const Forest& f, LabelClass cls, StatPair pair,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Closed-form right-hand sides, expanded exactly.
enum class Family {
    MahonianUnsigned,     // n!/prod h * prod [h_v]
    MahonianSigned,       // n!/prod h * prod [2 h_v]
    MahonianSignedWithN1, // n!/prod h * prod (1 + p q^(h_v)) [h_v]
    InvBtmaxUnsigned,     // n!/prod h * prod ([h_v] - 1 + t_v)
    InvBtmaxSigned,       // n!/prod h * prod ([2 h_v] - 1 + t_v)
    InvBtmaxSignedWithN1, // n!/prod h * prod ((1 + p q^(h_v)) [h_v] - 1 + t_v)
    InvBtmaxEvenSigned,   // n! 2^(#leaves-1)/prod h * prod over non-leaves
                          //   ((1 + q^(h_v - 1)) [h_v] - 1 + t_v)
};

std::string_view family_name(Family family);
Family family_from_name(std::string_view name);

MultiPoly product_formula(const Forest& f, Family family);

}  // namespace forestlab
