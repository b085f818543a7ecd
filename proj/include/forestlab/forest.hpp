#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forestlab {

// A plane forest on vertices v_1..v_n, roots drawn on top, viewed as the
// Hasse diagram of the poset (V, <_F) where u <_F v means u lies strictly
// below v. Stored as a parent array in 1-based vertex indices; entry 0 marks
// a root. Indexing is natural: a vertex always has a smaller index than its
// parent, i.e. parent[j-1] == 0 or parent[j-1] > j. Children are ordered by
// index — everything computed here depends only on the poset.
class Forest {
public:
    // Descendant sets are kept as u64 bitmasks.
    static constexpr int kMaxVertices = 64;

    // Throws std::invalid_argument unless every entry is 0 or in (index, n].
    static Forest from_parents(std::vector<int> parents);

    // Comma-separated parent entries, e.g. "3,3,5,5,0"; whitespace ignored.
    static Forest parse(std::string_view text);

    int size() const { return n_; }

    // 1-based; 0 for roots.
    int parent(int v) const;
    const std::vector<int>& parents() const { return parent_; }

    bool is_root(int v) const { return parent(v) == 0; }
    bool is_leaf(int v) const;
    int leaf_count() const;
    std::vector<int> roots() const;

    // u <_F v, strict.
    bool strictly_below(int u, int v) const;

    // Bit (u-1) set iff u <_F v.
    std::uint64_t below_mask(int v) const;

    // Sorted strict descendants of v.
    std::vector<int> below(int v) const;

    // Sorted vertices of the subtree rooted at v, including v.
    std::vector<int> subtree_vertices(int v) const;

    // The subtree rooted at v as a forest of its own; vertices keep their
    // relative index order.
    Forest subtree(int v) const;

    // h_v = size of the principal order ideal generated by v.
    int subtree_size(int v) const;
    const std::vector<int>& subtree_sizes() const { return h_; }

    // True iff the forest is the chain v_1 <_F v_2 <_F ... <_F v_n.
    bool is_path() const;

    // n!/prod h_v = number of natural labelings (linear extensions).
    // Throws std::overflow_error when the factorial exceeds 64 bits.
    std::uint64_t natural_labeling_count() const;

    // Key identifying the poset-isomorphism class (children shapes sorted).
    std::string canonical_shape() const;

    std::string to_string() const;

    friend bool operator==(const Forest&, const Forest&) = default;

private:
    int n_ = 0;
    std::vector<int> parent_;
    std::vector<int> h_;
    std::vector<std::uint64_t> below_;
};

// The chain v_1 <_F ... <_F v_n (parents 2,3,...,n,0).
Forest linear_tree(int n);

// All parent arrays of size n in lexicographic order; with dedup_isomorphic,
// one representative (the lexicographically first array) per poset class.
std::vector<Forest> enumerate_forests(int n, bool dedup_isomorphic);

// Checked helpers; throw std::overflow_error.
std::uint64_t checked_factorial(int n);
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);

}  // namespace forestlab
