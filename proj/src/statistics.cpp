#include "forestlab/statistics.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace forestlab {

namespace {

void check_sizes(const Forest& f, const Labeling& w) {
    if (f.size() != w.size()) throw std::invalid_argument("forest/labeling size mismatch");
}

template <class Pred>
int count_below(const Forest& f, int v, Pred&& pred) {
    int c = 0;
    std::uint64_t m = f.below_mask(v);
    while (m) {
        const int u = std::countr_zero(m) + 1;
        m &= m - 1;
        c += pred(u);
    }
    return c;
}

}  // namespace

int inv(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    int total = 0;
    for (int v = 1; v <= f.size(); ++v)
        total += count_below(f, v, [&](int u) { return w[u] > w[v]; });
    return total;
}

int n_two(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    int total = 0;
    for (int v = 1; v <= f.size(); ++v)
        total += count_below(f, v, [&](int u) { return w[u] + w[v] < 0; });
    return total;
}

int inv_b(const Forest& f, const Labeling& w) {
    return inv(f, w) + w.negative_count() + n_two(f, w);
}

int inv_d(const Forest& f, const Labeling& w) {
    if (!w.is_even_signed())
        throw std::domain_error("inv_D requires an even-signed labeling");
    return inv(f, w) + n_two(f, w);
}

DescentInfo des_maj(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    DescentInfo out;
    for (int v = 1; v <= f.size(); ++v) {
        const int p = f.parent(v);
        if (p != 0 && w[v] > w[p]) {
            out.des.push_back(v);
            out.maj += f.subtree_size(v);
        }
    }
    return out;
}

SignedDescentInfo des_b_maj_b(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    SignedDescentInfo out;
    for (int v = 1; v <= f.size(); ++v) {
        const int p = f.parent(v);
        const bool in = (p != 0) ? (w[v] > w[p]) : (w[v] > 0);
        if (in) {
            out.des_b.push_back(v);
            out.maj_b += f.subtree_size(v);
        }
    }
    out.positive_count = w.positive_count();
    return out;
}

int fmaj(const Forest& f, const Labeling& w) {
    return 2 * des_maj(f, w).maj + w.negative_count();
}

int rmaj(const Forest& f, const Labeling& w) {
    const SignedDescentInfo s = des_b_maj_b(f, w);
    return 2 * s.maj_b - s.positive_count;
}

std::vector<int> btmax(const Forest& f, const Labeling& w, Variant variant) {
    check_sizes(f, w);
    if (variant == Variant::A && !w.all_positive())
        throw std::domain_error("btmax variant A requires an unsigned labeling");
    if (variant == Variant::D && !w.is_even_signed())
        throw std::domain_error("btmax variant D requires an even-signed labeling");
    std::vector<int> out;
    for (int v = 1; v <= f.size(); ++v) {
        if (variant == Variant::D && f.is_leaf(v)) continue;
        if (variant != Variant::A && w[v] < 0) continue;
        const bool is_max = count_below(f, v, [&](int u) {
            return variant == Variant::A ? w[u] >= w[v] : std::abs(w[u]) >= w[v];
        }) == 0;
        if (is_max) out.push_back(v);
    }
    return out;
}

std::vector<int> cbtmax(const Forest& f, const Labeling& w, Variant variant) {
    check_sizes(f, w);
    if (variant == Variant::D) throw std::domain_error("cbtmax has no variant D");
    if (variant == Variant::A && !w.all_positive())
        throw std::domain_error("cbtmax variant A requires an unsigned labeling");
    const int n = f.size();
    std::vector<int> out;
    for (int v = 1; v <= n; ++v) {
        if (variant == Variant::B && w[v] < 0) continue;
        const int p = f.parent(v);
        const int wp = (p == 0) ? n + 1 : w[p];
        // Labels are distinct nonzero integers, so [a, b] over either order
        // is the plain integer interval.
        int offenders;
        if (w[v] < wp) {
            offenders = count_below(f, v, [&](int u) { return w[u] >= w[v] && w[u] <= wp; });
        } else {
            offenders = count_below(f, v, [&](int u) { return w[u] < wp || w[u] > w[v]; });
        }
        if (offenders == 0) out.push_back(v);
    }
    return out;
}

StatRecord stat_record(const Forest& f, const Labeling& w) {
    StatRecord r;
    r.n = f.size();
    r.inv = inv(f, w);
    const DescentInfo d = des_maj(f, w);
    r.des = d.des;
    r.maj = d.maj;
    r.n1 = w.negative_count();
    r.n2 = n_two(f, w);
    r.inv_b = r.inv + r.n1 + r.n2;
    const SignedDescentInfo sb = des_b_maj_b(f, w);
    r.des_b = sb.des_b;
    r.maj_b = sb.maj_b;
    r.p_pos = sb.positive_count;
    r.fmaj = 2 * r.maj + r.n1;
    r.rmaj = 2 * r.maj_b - r.p_pos;
    r.btmax_b = btmax(f, w, Variant::B);
    r.cbtmax_b = cbtmax(f, w, Variant::B);
    if (w.is_even_signed()) {
        r.inv_d = r.inv + r.n2;
        r.btmax_d = btmax(f, w, Variant::D);
    }
    if (w.all_positive()) {
        r.btmax_a = btmax(f, w, Variant::A);
        r.cbtmax_a = cbtmax(f, w, Variant::A);
    }
    return r;
}

}  // namespace forestlab
