#include "forestlab/forest.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace forestlab {

namespace {

std::vector<int> parse_csv_ints(std::string_view text) {
    std::vector<int> out;
    std::string token;
    std::size_t field = 1;
    auto flush = [&](bool final_field) {
        std::string trimmed;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) {
            if (final_field && out.empty() && token.empty()) return;  // fully empty input handled by caller
            throw std::invalid_argument("empty field at position " + std::to_string(field));
        }
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(trimmed, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid integer '" + trimmed + "' at position " + std::to_string(field));
        }
        if (pos != trimmed.size())
            throw std::invalid_argument("invalid integer '" + trimmed + "' at position " + std::to_string(field));
        out.push_back(value);
        token.clear();
        ++field;
    };
    for (char c : text) {
        if (c == ',') {
            flush(false);
        } else {
            token += c;
        }
    }
    flush(true);
    return out;
}

}  // namespace

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("64-bit unsigned multiplication overflow");
    return r;
}

std::uint64_t checked_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r = checked_mul_u64(r, static_cast<std::uint64_t>(k));
    return r;
}

Forest Forest::from_parents(std::vector<int> parents) {
    const int n = static_cast<int>(parents.size());
    if (n == 0) throw std::invalid_argument("forest must have at least one vertex");
    if (n > kMaxVertices) throw std::invalid_argument("forest too large (max 64 vertices)");
    for (int j = 1; j <= n; ++j) {
        const int p = parents[j - 1];
        if (p == 0) continue;
        if (p <= j || p > n)
            throw std::invalid_argument("parent of v_" + std::to_string(j) + " is " + std::to_string(p) +
                                        "; must be 0 or in (" + std::to_string(j) + ", " + std::to_string(n) + "]");
    }

    Forest f;
    f.n_ = n;
    f.parent_ = std::move(parents);
    f.below_.assign(n, 0);
    // Propagating child masks in increasing index order is complete because
    // every descendant of v_j has index < j.
    for (int j = 1; j <= n; ++j) {
        const int p = f.parent_[j - 1];
        if (p != 0) f.below_[p - 1] |= f.below_[j - 1] | (std::uint64_t{1} << (j - 1));
    }
    f.h_.resize(n);
    for (int j = 0; j < n; ++j) f.h_[j] = std::popcount(f.below_[j]) + 1;
    return f;
}

Forest Forest::parse(std::string_view text) {
    std::vector<int> entries;
    try {
        entries = parse_csv_ints(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("forest: ") + e.what());
    }
    if (entries.empty()) throw std::invalid_argument("forest: empty input");
    return from_parents(std::move(entries));
}

int Forest::parent(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    return parent_[v - 1];
}

bool Forest::is_leaf(int v) const { return below_mask(v) == 0; }

int Forest::leaf_count() const {
    int c = 0;
    for (int v = 1; v <= n_; ++v) c += is_leaf(v);
    return c;
}

std::vector<int> Forest::roots() const {
    std::vector<int> r;
    for (int v = 1; v <= n_; ++v)
        if (parent_[v - 1] == 0) r.push_back(v);
    return r;
}

bool Forest::strictly_below(int u, int v) const {
    if (u < 1 || u > n_) throw std::out_of_range("vertex index out of range");
    return (below_mask(v) >> (u - 1)) & 1;
}

std::uint64_t Forest::below_mask(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    return below_[v - 1];
}

std::vector<int> Forest::below(int v) const {
    std::vector<int> out;
    std::uint64_t m = below_mask(v);
    while (m) {
        const int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

std::vector<int> Forest::subtree_vertices(int v) const {
    std::vector<int> out = below(v);
    out.push_back(v);
    return out;
}

Forest Forest::subtree(int v) const {
    const std::vector<int> verts = subtree_vertices(v);
    std::vector<int> index_of(n_ + 1, 0);
    for (std::size_t k = 0; k < verts.size(); ++k) index_of[verts[k]] = static_cast<int>(k) + 1;
    std::vector<int> parents(verts.size());
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const int p = parent_[verts[k] - 1];
        parents[k] = (verts[k] == v) ? 0 : index_of[p];
    }
    return from_parents(std::move(parents));
}

int Forest::subtree_size(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
    return h_[v - 1];
}

bool Forest::is_path() const {
    for (int j = 1; j < n_; ++j)
        if (parent_[j - 1] != j + 1) return false;
    return parent_[n_ - 1] == 0;
}

std::uint64_t Forest::natural_labeling_count() const {
    const std::uint64_t fact = checked_factorial(n_);
    std::uint64_t denom = 1;
    for (int h : h_) denom = checked_mul_u64(denom, static_cast<std::uint64_t>(h));
    if (fact % denom != 0)
        throw std::logic_error("hook product does not divide n!");
    return fact / denom;
}

namespace {
std::string shape_key(int v, const std::vector<std::vector<int>>& children) {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(shape_key(c, children));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    s += ")";
    return s;
}
}  // namespace

std::string Forest::canonical_shape() const {
    std::vector<std::vector<int>> children(n_ + 1);
    for (int v = 1; v <= n_; ++v)
        if (parent_[v - 1] != 0) children[parent_[v - 1]].push_back(v);
    std::vector<std::string> parts;
    for (int r : roots()) parts.push_back(shape_key(r, children));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += p;
    return s;
}

std::string Forest::to_string() const {
    std::ostringstream os;
    for (int j = 0; j < n_; ++j) {
        if (j) os << ',';
        os << parent_[j];
    }
    return os.str();
}

Forest linear_tree(int n) {
    std::vector<int> parents(n);
    for (int j = 1; j < n; ++j) parents[j - 1] = j + 1;
    parents[n - 1] = 0;
    return Forest::from_parents(std::move(parents));
}

std::vector<Forest> enumerate_forests(int n, bool dedup_isomorphic) {
    if (n < 1) throw std::invalid_argument("forest size must be positive");
    std::vector<Forest> out;
    std::vector<std::string> seen;
    std::vector<int> parents(n, 0);
    // Entry j (1-based) ranges over {0, j+1, ..., n}; odometer in lex order.
    auto value_at = [&](int j, int choice) { return choice == 0 ? 0 : j + choice; };
    std::vector<int> choice(n, 0);
    const auto choices_for = [&](int j) { return n - j + 1; };  // 0 plus j+1..n
    while (true) {
        for (int j = 1; j <= n; ++j) parents[j - 1] = value_at(j, choice[j - 1]);
        Forest f = Forest::from_parents(parents);
        if (dedup_isomorphic) {
            std::string key = f.canonical_shape();
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                seen.push_back(std::move(key));
                out.push_back(std::move(f));
            }
        } else {
            out.push_back(std::move(f));
        }
        int j = n;
        while (j >= 1) {
            if (++choice[j - 1] < choices_for(j)) break;
            choice[j - 1] = 0;
            --j;
        }
        if (j < 1) break;
    }
    return out;
}

}  // namespace forestlab
