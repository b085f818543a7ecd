#pragma once

#include <string>
#include <vector>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"
#include "forestlab/statistics.hpp"

namespace forestlab {

// Subexcedent sequences attached to a forest: entry i is bounded by
// h_{v_i} - 1 (kind A) or 2 h_{v_i} - 1 (kind B).
enum class CodeBound { A, B };

struct CodeSeq {
    std::vector<int> entries;
    CodeBound bound = CodeBound::A;

    bool in_bounds(const Forest& f) const;
    std::string to_string() const;

    friend bool operator==(const CodeSeq&, const CodeSeq&) = default;
};

// Parses comma-separated nonnegative entries and validates them against f.
CodeSeq parse_code(const Forest& f, std::string_view text, CodeBound bound);

// A-code: a_i counts the inversions and negative-sum pairs v_i forms with
// vertices below it, plus 1 when its own label is negative. Entry sums give
// inv_B; zeros sit exactly at the signed bottom-to-top maxima.
CodeSeq a_code(const Forest& f, const Labeling& w);

struct CodedLabeling {
    Labeling natural;
    CodeSeq code;
};

// Bijection between signed labelings and (natural labeling, A-code) pairs.
CodedLabeling phi(const Forest& f, const Labeling& w);
Labeling phi_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code);

struct SortStep {
    int magnitude = 0;     // i: the absolute label being placed
    int vertex = 0;        // v: vertex holding +-i
    int pivot = 0;         // u: highest ancestor-or-self with |w(u)| <= i
    int contribution = 0;  // B-code entry b_pivot
    std::vector<int> labels_after;
};

struct SortResult {
    int sor_b = 0;
    Labeling sorted;          // natural positive labeling left by the sort
    CodeSeq bcode;            // contribution indexed by pivot vertex
    std::vector<SortStep> trace;
};

// The forest sorting algorithm: for i = n..1 move label +-i to its pivot,
// swapping (and flipping signs when the moved label is negative). The cost
// of a step is measured in the sublabeling induced at the pivot.
SortResult sort_forest(const Forest& f, const Labeling& w);

int sor_b(const Forest& f, const Labeling& w);
int sor(const Forest& f, const Labeling& w);  // unsigned labelings only

// Minimal cycle vertices: v with w'(v) minimal in (a balanced cycle of)
// w o w'^{-1}, where w' is the sorted labeling. Equals the zero set of the
// B-code, which is checked as a theorem, not assumed here.
std::vector<int> cyc_vertices(const Forest& f, const Labeling& w, Variant variant);

// Bijection between signed labelings and (natural labeling, B-code) pairs;
// restricted to unsigned labelings the codes stay below the A bounds.
CodedLabeling psi(const Forest& f, const Labeling& w);
Labeling psi_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code);

// M-code of an unsigned labeling: m_i counts vertices below v_i whose label
// breaks the cyclic bottom-to-top condition at v_i (parent label n+1 at
// roots). Entry sums give maj; zeros sit exactly at the cyclic maxima.
CodeSeq m_code(const Forest& f, const Labeling& w);

// Signed M-code: doubled counts plus 1 for a negative own label, over the
// order -n < ... < -1 < 1 < ... < n. Entry sums give fmaj; zeros sit at the
// signed cyclic maxima. Not every B-bounded sequence is attained.
CodeSeq m_code_signed(const Forest& f, const Labeling& w);

// Bijection between unsigned labelings and (natural labeling, A-bounded
// code) pairs realized by cyclic shifts of subtree labels.
CodedLabeling theta(const Forest& f, const Labeling& w);
Labeling theta_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code);

// theta^{-1} o phi: sends an unsigned labeling with statistics
// (inv, Btmax) to one with the same (maj, Cbtmax).
Labeling inv_to_maj_map(const Forest& f, const Labeling& w);

}  // namespace forestlab
