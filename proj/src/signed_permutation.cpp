#include "forestlab/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace forestlab {

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return of(std::move(w));
}

SignedPermutation SignedPermutation::of(std::vector<int> window) {
    // Same validity condition as a labeling: |window| is a permutation.
    Labeling::of(window);
    SignedPermutation s;
    s.window_ = std::move(window);
    return s;
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::string normalized(text);
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream is(normalized);
    std::vector<int> window;
    std::string token;
    std::size_t field = 1;
    while (is >> token) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != token.size())
            throw std::invalid_argument("permutation: invalid integer '" + token + "' at position " +
                                        std::to_string(field));
        window.push_back(value);
        ++field;
    }
    if (window.empty()) throw std::invalid_argument("permutation: empty input");
    return of(std::move(window));
}

int SignedPermutation::operator()(int i) const {
    const int n = size();
    if (i == 0 || i < -n || i > n) throw std::out_of_range("permutation argument out of range");
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = size();
    std::vector<int> inv(n);
    for (int i = 1; i <= n; ++i) {
        const int v = window_[i - 1];
        if (v > 0)
            inv[v - 1] = i;
        else
            inv[-v - 1] = -i;
    }
    return of(std::move(inv));
}

bool SignedPermutation::is_unsigned() const {
    return std::all_of(window_.begin(), window_.end(), [](int x) { return x > 0; });
}

bool SignedPermutation::is_even_signed() const {
    int neg = 0;
    for (int x : window_) neg += x < 0;
    return (neg & 1) == 0;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << ' ';
        os << window_[i];
    }
    return os.str();
}

std::string SignedPermutation::cycle_string() const {
    std::ostringstream os;
    for (const Cycle& c : cycle_decomposition(*this)) {
        os << '(';
        for (std::size_t k = 0; k < c.elements.size(); ++k) {
            if (k) os << ' ';
            os << c.elements[k];
        }
        os << ')';
    }
    return os.str();
}

std::vector<Cycle> cycle_decomposition(const SignedPermutation& sigma) {
    const int n = sigma.size();
    std::vector<bool> visited(n + 1, false);
    std::vector<Cycle> out;
    for (int m = 1; m <= n; ++m) {
        if (visited[m]) continue;
        Cycle c;
        c.min_abs = m;
        int x = m;
        do {
            c.elements.push_back(x);
            visited[std::abs(x)] = true;
            x = sigma(x);
        } while (x != m && x != -m);
        if (x == -m) {
            // Unbalanced: keep following until the orbit closes at +m.
            do {
                c.elements.push_back(x);
                x = sigma(x);
            } while (x != m);
            c.balanced = false;
        } else {
            c.balanced = true;
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> cyc_min(const SignedPermutation& sigma, Variant variant) {
    if (variant == Variant::D) throw std::domain_error("cyc_min has no variant D");
    if (variant == Variant::A && !sigma.is_unsigned())
        throw std::domain_error("cyc_min variant A requires an unsigned permutation");
    std::vector<int> out;
    for (const Cycle& c : cycle_decomposition(sigma)) {
        if (variant == Variant::A) {
            out.push_back(*std::min_element(c.elements.begin(), c.elements.end()));
        } else if (c.balanced) {
            out.push_back(c.min_abs);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> rlmin(const SignedPermutation& sigma, Variant variant) {
    if (variant == Variant::A && !sigma.is_unsigned())
        throw std::domain_error("rlmin variant A requires an unsigned permutation");
    if (variant == Variant::D && !sigma.is_even_signed())
        throw std::domain_error("rlmin variant D requires an even-signed permutation");
    const auto& win = sigma.window();
    const int n = sigma.size();
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        const int s = win[i];
        if (variant != Variant::A && s <= 0) continue;
        if (variant == Variant::D && s == 1) continue;
        bool ok = true;
        for (int j = i + 1; j < n && ok; ++j)
            ok = variant == Variant::A ? s < win[j] : s < std::abs(win[j]);
        if (ok) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int ssort_sor(const SignedPermutation& sigma, Variant variant) {
    if (variant == Variant::D) throw std::domain_error("ssort_sor has no variant D");
    if (variant == Variant::A && !sigma.is_unsigned())
        throw std::domain_error("ssort_sor variant A requires an unsigned permutation");
    std::vector<int> win = sigma.window();
    const int n = sigma.size();
    int total = 0;
    for (int k = n; k >= 1; --k) {
        int i = 0;
        while (std::abs(win[i]) != k) ++i;
        ++i;  // 1-based position of +-k
        if (win[i - 1] == k) {
            if (i != k) {
                std::swap(win[i - 1], win[k - 1]);
                total += k - i;
            }
        } else {
            // Sign-flipping transposition (-i, k).
            const int a = win[i - 1], b = win[k - 1];
            win[i - 1] = -b;
            win[k - 1] = -a;
            total += k + i - 1;
        }
    }
    return total;
}

int length(const SignedPermutation& sigma, Variant variant) {
    if (variant == Variant::A && !sigma.is_unsigned())
        throw std::domain_error("length variant A requires an unsigned permutation");
    if (variant == Variant::D && !sigma.is_even_signed())
        throw std::domain_error("length variant D requires an even-signed permutation");
    const auto& win = sigma.window();
    const int n = sigma.size();
    int inv = 0, none = 0, ntwo = 0;
    for (int i = 0; i < n; ++i) {
        none += win[i] < 0;
        for (int j = i + 1; j < n; ++j) {
            inv += win[i] > win[j];
            ntwo += win[i] + win[j] < 0;
        }
    }
    switch (variant) {
        case Variant::A: return inv;
        case Variant::B: return inv + none + ntwo;
        case Variant::D: return inv + ntwo;
    }
    throw std::logic_error("unreachable");
}

Forest linear_tree_bridge(int n) { return linear_tree(n); }

SignedPermutation read_word(const Forest& f, const Labeling& w) {
    if (!f.is_path()) throw std::domain_error("read_word requires the linear tree");
    if (f.size() != w.size()) throw std::invalid_argument("forest/labeling size mismatch");
    return SignedPermutation::of(w.values());
}

SignedPermutation quotient_permutation(const Labeling& w, const Labeling& w_nat) {
    const int n = w.size();
    if (w_nat.size() != n) throw std::invalid_argument("labeling size mismatch");
    if (!w_nat.all_positive()) throw std::invalid_argument("quotient requires a positive natural labeling");
    std::vector<int> win(n);
    for (int v = 1; v <= n; ++v) win[w_nat[v] - 1] = w[v];
    return SignedPermutation::of(std::move(win));
}

}  // namespace forestlab
