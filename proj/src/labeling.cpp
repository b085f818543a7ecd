#include "forestlab/labeling.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace forestlab {

std::string_view label_class_name(LabelClass cls) {
    switch (cls) {
        case LabelClass::Unsigned: return "unsigned";
        case LabelClass::Signed: return "signed";
        case LabelClass::EvenSigned: return "even-signed";
    }
    return "?";
}

LabelClass label_class_from_name(std::string_view name) {
    if (name == "unsigned") return LabelClass::Unsigned;
    if (name == "signed") return LabelClass::Signed;
    if (name == "even-signed" || name == "even_signed") return LabelClass::EvenSigned;
    throw std::invalid_argument("unknown labeling class '" + std::string(name) + "'");
}

Labeling Labeling::of(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) throw std::invalid_argument("labeling must have at least one value");
    if (n > Forest::kMaxVertices) throw std::invalid_argument("labeling too large");
    std::vector<bool> seen(n + 1, false);
    for (int x : values) {
        const int a = x < 0 ? -x : x;
        if (a < 1 || a > n)
            throw std::invalid_argument("label " + std::to_string(x) + " out of range for n=" + std::to_string(n));
        if (seen[a])
            throw std::invalid_argument("absolute value " + std::to_string(a) + " used twice");
        seen[a] = true;
    }
    Labeling w;
    w.values_ = std::move(values);
    return w;
}

Labeling Labeling::parse(std::string_view text) {
    std::vector<int> values;
    std::string token;
    std::size_t field = 1;
    auto flush = [&] {
        std::string trimmed;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty())
            throw std::invalid_argument("labeling: empty field at position " + std::to_string(field));
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(trimmed, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != trimmed.size())
            throw std::invalid_argument("labeling: invalid integer '" + trimmed + "' at position " +
                                        std::to_string(field));
        values.push_back(value);
        token.clear();
        ++field;
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else
            token += c;
    }
    flush();
    return of(std::move(values));
}

int Labeling::at(int v) const {
    if (v < 1 || v > size()) throw std::out_of_range("vertex index out of range");
    return values_[v - 1];
}

bool Labeling::all_positive() const {
    for (int x : values_)
        if (x < 0) return false;
    return true;
}

int Labeling::negative_count() const {
    int c = 0;
    for (int x : values_) c += x < 0;
    return c;
}

int Labeling::positive_count() const { return size() - negative_count(); }

bool Labeling::is_even_signed() const { return (negative_count() & 1) == 0; }

bool Labeling::is_natural(const Forest& f) const {
    if (f.size() != size()) throw std::invalid_argument("forest/labeling size mismatch");
    if (!all_positive()) return false;
    for (int v = 1; v <= size(); ++v) {
        const int p = f.parent(v);
        if (p != 0 && values_[v - 1] > values_[p - 1]) return false;
    }
    return true;
}

std::string Labeling::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

std::uint64_t labeling_count(int n, LabelClass cls) {
    const std::uint64_t fact = checked_factorial(n);
    switch (cls) {
        case LabelClass::Unsigned: return fact;
        case LabelClass::Signed:
            if (n >= 64) throw std::overflow_error("sign mask overflow");
            return checked_mul_u64(fact, std::uint64_t{1} << n);
        case LabelClass::EvenSigned:
            if (n >= 64) throw std::overflow_error("sign mask overflow");
            return n == 0 ? fact : checked_mul_u64(fact, std::uint64_t{1} << (n - 1));
    }
    throw std::logic_error("unreachable");
}

void check_enumeration_bound(int n, LabelClass cls, std::uint64_t cap) {
    std::uint64_t total;
    try {
        total = labeling_count(n, cls);
    } catch (const std::overflow_error&) {
        throw std::domain_error("exhaustive enumeration refused: labeling count overflows for n=" +
                                std::to_string(n));
    }
    if (total > cap)
        throw std::domain_error("exhaustive enumeration refused: " + std::to_string(total) + " " +
                                std::string(label_class_name(cls)) + " labelings exceeds cap of " +
                                std::to_string(cap));
}

std::vector<int> permutation_at(int n, std::uint64_t rank) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = checked_mul_u64(fact[i - 1], static_cast<std::uint64_t>(i));
    if (rank >= fact[n]) throw std::out_of_range("permutation rank out of range");
    std::vector<int> out;
    out.reserve(n);
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = fact[i];
        const std::size_t idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

std::vector<Labeling> all_labelings(const Forest& f, LabelClass cls, std::uint64_t cap) {
    std::vector<Labeling> out;
    for_each_labeling(f, cls, [&](const Labeling& w) { out.push_back(w); }, cap);
    return out;
}

std::vector<Labeling> all_natural_labelings(const Forest& f) {
    std::vector<Labeling> out;
    for_each_natural_labeling(f, [&](const Labeling& w) { out.push_back(w); });
    return out;
}

Labeling induced_sublabeling(const Forest& f, const Labeling& w, int j) {
    if (f.size() != w.size()) throw std::invalid_argument("forest/labeling size mismatch");
    const std::vector<int> verts = f.subtree_vertices(j);
    std::vector<int> abs_sorted;
    abs_sorted.reserve(verts.size());
    for (int v : verts) abs_sorted.push_back(std::abs(w[v]));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    std::vector<int> out;
    out.reserve(verts.size());
    for (int v : verts) {
        const int a = std::abs(w[v]);
        const int rank = static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(), a) -
                                          abs_sorted.begin()) + 1;
        out.push_back(w[v] < 0 ? -rank : rank);
    }
    return Labeling::of(std::move(out));
}

}  // namespace forestlab
