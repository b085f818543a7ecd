#pragma once

#include <optional>
#include <vector>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"

namespace forestlab {

// Type of a statistic: A = unsigned, B = signed, D = even-signed.
enum class Variant { A, B, D };

// inv(F,w) = #{(u,v) : u <_F v, w(u) > w(v)}, on signed values directly.
int inv(const Forest& f, const Labeling& w);

// n_2(F,w) = #{(u,v) : u <_F v, w(u) + w(v) < 0}.
int n_two(const Forest& f, const Labeling& w);

// inv_B = inv + n_1 + n_2; inv_D = inv + n_2 (even-signed only, throws
// std::domain_error otherwise).
int inv_b(const Forest& f, const Labeling& w);
int inv_d(const Forest& f, const Labeling& w);

struct DescentInfo {
    std::vector<int> des;  // non-root vertices v with w(v) > w(parent(v))
    int maj = 0;           // sum of h_v over des
};
DescentInfo des_maj(const Forest& f, const Labeling& w);

struct SignedDescentInfo {
    std::vector<int> des_b;  // des plus positively labeled roots
    int maj_b = 0;
    int positive_count = 0;  // p(F,w)
};
SignedDescentInfo des_b_maj_b(const Forest& f, const Labeling& w);

int fmaj(const Forest& f, const Labeling& w);  // 2 maj + n_1
int rmaj(const Forest& f, const Labeling& w);  // 2 maj_B - p

// Bottom-to-top maximum positions.
//   A: w(v) > w(u) for all u <_F v                (unsigned w only)
//   B: w(v) > 0 and w(v) > |w(u)| for all u <_F v
//   D: variant B restricted to non-leaves         (even-signed w only)
std::vector<int> btmax(const Forest& f, const Labeling& w, Variant variant);

// Cyclic bottom-to-top maximum positions, w(parent) = n+1 at roots.
//   A: unsigned w, natural order 1 < ... < n
//   B: positive label required, signed order -n < ... < -1 < 1 < ... < n
// v is in the set when no u <_F v has w(u) inside [w(v), w(p)] (if
// w(v) < w(p)) resp. outside [w(p), w(v)] (if w(p) < w(v)).
std::vector<int> cbtmax(const Forest& f, const Labeling& w, Variant variant);

// Every pointwise statistic of a labeled forest; set-valued entries are
// sorted 1-based vertex indices. A-variant and D-variant fields are only
// present when the labeling class admits them.
struct StatRecord {
    int n = 0;
    int inv = 0;
    int maj = 0;
    int n1 = 0;
    int n2 = 0;
    int inv_b = 0;
    int maj_b = 0;
    int fmaj = 0;
    int rmaj = 0;
    int p_pos = 0;
    std::optional<int> inv_d;
    std::vector<int> des;
    std::vector<int> des_b;
    std::vector<int> btmax_b;
    std::vector<int> cbtmax_b;
    std::optional<std::vector<int>> btmax_a;
    std::optional<std::vector<int>> cbtmax_a;
    std::optional<std::vector<int>> btmax_d;
};

StatRecord stat_record(const Forest& f, const Labeling& w);

}  // namespace forestlab
