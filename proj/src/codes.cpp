#include "forestlab/codes.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "forestlab/signed_permutation.hpp"

namespace forestlab {

namespace {

void check_sizes(const Forest& f, const Labeling& w) {
    if (f.size() != w.size()) throw std::invalid_argument("forest/labeling size mismatch");
}

void check_code(const Forest& f, const CodeSeq& code) {
    if (static_cast<int>(code.entries.size()) != f.size())
        throw std::invalid_argument("code length does not match forest size");
    if (!code.in_bounds(f)) throw std::invalid_argument("code entries violate subexcedence bounds");
}

void check_natural(const Forest& f, const Labeling& w) {
    if (!w.is_natural(f)) throw std::invalid_argument("labeling is not natural");
}

// Vertices of the subtree at j sorted by current absolute label.
std::vector<int> subtree_by_abs(const Forest& f, const std::vector<int>& vals, int j) {
    std::vector<int> verts = f.subtree_vertices(j);
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return std::abs(vals[a - 1]) < std::abs(vals[b - 1]); });
    return verts;
}

}  // namespace

bool CodeSeq::in_bounds(const Forest& f) const {
    if (static_cast<int>(entries.size()) != f.size()) return false;
    for (int i = 1; i <= f.size(); ++i) {
        const int h = f.subtree_size(i);
        const int cap = bound == CodeBound::A ? h - 1 : 2 * h - 1;
        if (entries[i - 1] < 0 || entries[i - 1] > cap) return false;
    }
    return true;
}

std::string CodeSeq::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ',';
        os << entries[i];
    }
    return os.str();
}

CodeSeq parse_code(const Forest& f, std::string_view text, CodeBound bound) {
    std::vector<int> entries;
    std::string token;
    for (char c : text) {
        if (c == ',') {
            entries.push_back(std::stoi(token));
            token.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    if (!token.empty()) entries.push_back(std::stoi(token));
    CodeSeq code{std::move(entries), bound};
    check_code(f, code);
    return code;
}

CodeSeq a_code(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    const int n = f.size();
    std::vector<int> entries(n, 0);
    for (int i = 1; i <= n; ++i) {
        int a = w[i] < 0 ? 1 : 0;
        for (int u : f.below(i)) {
            a += w[u] > w[i];
            a += w[u] + w[i] < 0;
        }
        entries[i - 1] = a;
    }
    return CodeSeq{std::move(entries), CodeBound::B};
}

CodedLabeling phi(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    CodeSeq code = a_code(f, w);
    std::vector<int> vals = w.values();
    // Working top-down, each step lifts the largest absolute label of the
    // subtree to its root v_i (positively) and re-ranks the vertices below,
    // keeping their relative absolute order and their signs in place.
    for (int i = f.size(); i >= 1; --i) {
        const std::vector<int> by_abs = subtree_by_abs(f, vals, i);
        const int h = static_cast<int>(by_abs.size());
        const int max_abs = std::abs(vals[by_abs[h - 1] - 1]);
        // Pool: the h-1 smallest absolute values of the subtree, ascending.
        std::vector<int> pool;
        pool.reserve(h - 1);
        for (int k = 0; k < h - 1; ++k) pool.push_back(std::abs(vals[by_abs[k] - 1]));
        // Every vertex strictly below v_i is re-ranked, including the one
        // that donated the maximum.
        std::vector<int> below_sorted;
        below_sorted.reserve(h - 1);
        for (int v : by_abs)
            if (v != i) below_sorted.push_back(v);
        for (std::size_t k = 0; k < below_sorted.size(); ++k) {
            const int v = below_sorted[k];
            const int sign = vals[v - 1] < 0 ? -1 : 1;
            vals[v - 1] = sign * pool[k];
        }
        vals[i - 1] = max_abs;
    }
    Labeling natural = Labeling::of(std::move(vals));
    check_natural(f, natural);
    return CodedLabeling{std::move(natural), std::move(code)};
}

Labeling phi_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code) {
    check_natural(f, w_nat);
    if (code.bound != CodeBound::B) throw std::invalid_argument("phi_inv expects a B-bounded code");
    check_code(f, code);
    std::vector<int> vals = w_nat.values();
    for (int i = 1; i <= f.size(); ++i) {
        const int h = f.subtree_size(i);
        const int a = code.entries[i - 1];
        std::vector<int> abs_sorted;
        for (int v : f.subtree_vertices(i)) abs_sorted.push_back(std::abs(vals[v - 1]));
        std::sort(abs_sorted.begin(), abs_sorted.end());
        int picked, new_value;
        if (a < h) {
            picked = abs_sorted[h - 1 - a];  // (a+1)-st largest
            new_value = picked;
        } else {
            picked = abs_sorted[a - h];  // (a-h+1)-st smallest
            new_value = -picked;
        }
        std::vector<int> pool;
        for (int x : abs_sorted)
            if (x != picked) pool.push_back(x);
        std::vector<int> below_sorted;
        for (int v : subtree_by_abs(f, vals, i))
            if (v != i) below_sorted.push_back(v);
        for (std::size_t k = 0; k < below_sorted.size(); ++k) {
            const int v = below_sorted[k];
            const int sign = vals[v - 1] < 0 ? -1 : 1;
            vals[v - 1] = sign * pool[k];
        }
        vals[i - 1] = new_value;
    }
    return Labeling::of(std::move(vals));
}

SortResult sort_forest(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    const int n = f.size();
    std::vector<int> vals = w.values();
    std::vector<int> bcode(n, -1);
    std::vector<SortStep> trace;
    trace.reserve(n);
    int total = 0;
    std::vector<int> position(n + 1, 0);  // position[a] = vertex holding +-a
    for (int v = 1; v <= n; ++v) position[std::abs(vals[v - 1])] = v;
    for (int i = n; i >= 1; --i) {
        const int v = position[i];
        // Pivot: the last (hence highest-index) vertex on the root chain of
        // v whose label is at most i in absolute value.
        int u = 0;
        for (int x = v; x != 0; x = f.parent(x))
            if (std::abs(vals[x - 1]) <= i) u = x;
        // Contribution in the sublabeling induced at u: the moved label has
        // the largest absolute value there.
        const std::vector<int> by_abs = subtree_by_abs(f, vals, u);
        const int rank_v = static_cast<int>(std::find(by_abs.begin(), by_abs.end(), v) - by_abs.begin()) + 1;
        const int rank_u = static_cast<int>(std::find(by_abs.begin(), by_abs.end(), u) - by_abs.begin()) + 1;
        const int contribution =
            vals[u - 1] > 0 ? rank_v - rank_u : rank_v + rank_u - 1;
        if (bcode[u - 1] != -1) throw std::logic_error("sort pivot visited twice");
        bcode[u - 1] = contribution;
        total += contribution;
        if (vals[v - 1] > 0) {
            std::swap(vals[u - 1], vals[v - 1]);
        } else {
            const int a = vals[u - 1], b = vals[v - 1];
            vals[u - 1] = -b;
            vals[v - 1] = -a;
        }
        position[std::abs(vals[v - 1])] = v;
        position[std::abs(vals[u - 1])] = u;
        trace.push_back(SortStep{i, v, u, contribution, vals});
    }
    Labeling sorted = Labeling::of(vals);
    check_natural(f, sorted);
    return SortResult{total, std::move(sorted), CodeSeq{std::move(bcode), CodeBound::B},
                      std::move(trace)};
}

int sor_b(const Forest& f, const Labeling& w) { return sort_forest(f, w).sor_b; }

int sor(const Forest& f, const Labeling& w) {
    if (!w.all_positive()) throw std::domain_error("sor requires an unsigned labeling");
    return sort_forest(f, w).sor_b;
}

std::vector<int> cyc_vertices(const Forest& f, const Labeling& w, Variant variant) {
    if (variant == Variant::D) throw std::domain_error("cyc_vertices has no variant D");
    if (variant == Variant::A && !w.all_positive())
        throw std::domain_error("cyc_vertices variant A requires an unsigned labeling");
    const Labeling sorted = sort_forest(f, w).sorted;
    const SignedPermutation sigma = quotient_permutation(w, sorted);
    const std::vector<int> mins = cyc_min(sigma, variant);
    std::vector<int> out;
    for (int v = 1; v <= f.size(); ++v)
        if (std::binary_search(mins.begin(), mins.end(), sorted[v])) out.push_back(v);
    return out;
}

CodedLabeling psi(const Forest& f, const Labeling& w) {
    SortResult r = sort_forest(f, w);
    return CodedLabeling{std::move(r.sorted), std::move(r.bcode)};
}

Labeling psi_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code) {
    check_natural(f, w_nat);
    check_code(f, code);
    std::vector<int> vals = w_nat.values();
    const int n = f.size();
    std::vector<int> position(n + 1, 0);
    for (int v = 1; v <= n; ++v) position[std::abs(vals[v - 1])] = v;
    for (int i = 1; i <= n; ++i) {
        const int j = position[i];  // vertex currently holding +-i
        const int h = f.subtree_size(j);
        const int b = code.entries[j - 1];
        const std::vector<int> by_abs = subtree_by_abs(f, vals, j);
        int u;
        bool flip;
        if (b < h) {
            u = by_abs[h - 1 - b];  // (b+1)-st largest
            flip = vals[u - 1] < 0;
        } else {
            u = by_abs[b - h];  // (b-h+1)-st smallest
            flip = vals[u - 1] > 0;
        }
        if (!flip) {
            std::swap(vals[u - 1], vals[j - 1]);
        } else {
            const int a = vals[u - 1], c = vals[j - 1];
            vals[u - 1] = -c;
            vals[j - 1] = -a;
        }
        position[std::abs(vals[j - 1])] = j;
        position[std::abs(vals[u - 1])] = u;
    }
    return Labeling::of(std::move(vals));
}

namespace {

// Shared by the unsigned and signed M-codes: count of vertices below v_i
// breaking the cyclic condition against the parent label (n+1 at roots).
int mcode_count(const Forest& f, const Labeling& w, int i) {
    const int p = f.parent(i);
    const int wp = p == 0 ? f.size() + 1 : w[p];
    int c = 0;
    if (w[i] < wp) {
        for (int u : f.below(i)) c += w[u] >= w[i] && w[u] <= wp;
    } else {
        for (int u : f.below(i)) c += w[u] < wp || w[u] > w[i];
    }
    return c;
}

}  // namespace

CodeSeq m_code(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    if (!w.all_positive()) throw std::domain_error("m_code requires an unsigned labeling");
    std::vector<int> entries(f.size());
    for (int i = 1; i <= f.size(); ++i) entries[i - 1] = mcode_count(f, w, i);
    return CodeSeq{std::move(entries), CodeBound::A};
}

CodeSeq m_code_signed(const Forest& f, const Labeling& w) {
    check_sizes(f, w);
    std::vector<int> entries(f.size());
    for (int i = 1; i <= f.size(); ++i)
        entries[i - 1] = 2 * mcode_count(f, w, i) + (w[i] < 0 ? 1 : 0);
    return CodeSeq{std::move(entries), CodeBound::B};
}

namespace {

// Cyclic shift of the subtree labels at v_i: the j-th smallest label
// becomes the (j + shift)-th smallest, indices mod h.
void shift_subtree_labels(const Forest& f, std::vector<int>& vals, int i, int shift) {
    const std::vector<int> verts = f.subtree_vertices(i);
    const int h = static_cast<int>(verts.size());
    shift = ((shift % h) + h) % h;
    if (shift == 0) return;
    std::vector<int> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(vals[v - 1]);
    std::sort(labels.begin(), labels.end());
    for (int v : verts) {
        const int idx = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), vals[v - 1]) -
                                         labels.begin());
        vals[v - 1] = labels[(idx + shift) % h];
    }
}

}  // namespace

CodedLabeling theta(const Forest& f, const Labeling& w) {
    CodeSeq code = m_code(f, w);
    std::vector<int> vals = w.values();
    for (int i = f.size(); i >= 1; --i) shift_subtree_labels(f, vals, i, code.entries[i - 1]);
    Labeling natural = Labeling::of(std::move(vals));
    check_natural(f, natural);
    return CodedLabeling{std::move(natural), std::move(code)};
}

Labeling theta_inv(const Forest& f, const Labeling& w_nat, const CodeSeq& code) {
    check_natural(f, w_nat);
    if (code.bound != CodeBound::A) throw std::invalid_argument("theta_inv expects an A-bounded code");
    check_code(f, code);
    std::vector<int> vals = w_nat.values();
    for (int i = 1; i <= f.size(); ++i) shift_subtree_labels(f, vals, i, -code.entries[i - 1]);
    return Labeling::of(std::move(vals));
}

Labeling inv_to_maj_map(const Forest& f, const Labeling& w) {
    if (!w.all_positive()) throw std::domain_error("inv_to_maj_map requires an unsigned labeling");
    CodedLabeling coded = phi(f, w);
    // Unsigned labelings have A-codes below the type A bounds.
    CodeSeq a_bounded{std::move(coded.code.entries), CodeBound::A};
    return theta_inv(f, coded.natural, a_bounded);
}

}  // namespace forestlab
