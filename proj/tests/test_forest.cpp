#include <doctest.h>

#include <set>

#include "forestlab/forest.hpp"
#include "forestlab/labeling.hpp"
#include "oracles.hpp"

using namespace forestlab;

namespace {
const std::vector<int> kFig1Parents{3, 3, 5, 5, 0};
}

TEST_CASE("forest construction enforces natural indexing") {
    const Forest f = Forest::from_parents(kFig1Parents);
    CHECK(f.size() == 5);
    CHECK(f.parent(1) == 3);
    CHECK(f.parent(5) == 0);
    CHECK(f.roots() == std::vector<int>{5});

    CHECK(Forest::from_parents({0}).size() == 1);
    CHECK_THROWS_AS(Forest::from_parents({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Forest::from_parents({2, 2}), std::invalid_argument);  // self/backward parent
    CHECK_THROWS_AS(Forest::from_parents({3, 0}), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(Forest::from_parents({}), std::invalid_argument);
}

TEST_CASE("forest parsing") {
    CHECK(Forest::parse("3,3,5,5,0").parents() == kFig1Parents);
    CHECK(Forest::parse(" 3 , 3 , 5 , 5 , 0 ").parents() == kFig1Parents);
    CHECK(Forest::parse("0").size() == 1);
    CHECK_THROWS_WITH_AS(Forest::parse("3,x,0"), doctest::Contains("position 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Forest::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Forest::parse("3,,0"), std::invalid_argument);
    CHECK(Forest::parse("3,3,5,5,0").to_string() == "3,3,5,5,0");
}

TEST_CASE("subtree sizes") {
    CHECK(Forest::from_parents(kFig1Parents).subtree_sizes() == std::vector<int>{1, 1, 3, 1, 5});
    CHECK(Forest::from_parents({0}).subtree_sizes() == std::vector<int>{1});
    CHECK(linear_tree(4).subtree_sizes() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("below sets match the parent-walking oracle") {
    const Forest fig1 = Forest::from_parents(kFig1Parents);
    CHECK(fig1.below(3) == std::vector<int>{1, 2});
    CHECK(fig1.below(5) == std::vector<int>{1, 2, 3, 4});
    CHECK(fig1.below(1).empty());

    for (int n = 1; n <= 6; ++n) {
        for (const Forest& f : enumerate_forests(n, false)) {
            for (int v = 1; v <= n; ++v) {
                CHECK(f.below(v) == oracle::below_set(f.parents(), v));
                CHECK(f.subtree_size(v) == oracle::subtree_size(f.parents(), v));
            }
        }
    }
}

TEST_CASE("subtree size recurrences") {
    for (int n = 1; n <= 6; ++n) {
        for (const Forest& f : enumerate_forests(n, false)) {
            int root_sum = 0;
            for (int r : f.roots()) root_sum += f.subtree_size(r);
            CHECK(root_sum == n);
            for (int v = 1; v <= n; ++v) {
                int child_sum = 0;
                for (int c = 1; c <= n; ++c)
                    if (f.parent(c) == v) child_sum += f.subtree_size(c);
                CHECK(f.subtree_size(v) == 1 + child_sum);
                CHECK((f.subtree_size(v) == 1) == f.is_leaf(v));
            }
        }
    }
}

TEST_CASE("natural labeling count") {
    CHECK(Forest::from_parents(kFig1Parents).natural_labeling_count() == 8);
    CHECK(linear_tree(7).natural_labeling_count() == 1);
    CHECK(Forest::from_parents({0, 0, 0, 0}).natural_labeling_count() == 24);

    // Against the filter-all-permutations oracle, and exact divisibility.
    for (int n = 1; n <= 6; ++n) {
        for (const Forest& f : enumerate_forests(n, true)) {
            CHECK(f.natural_labeling_count() == oracle::natural_labelings(f.parents()).size());
            std::uint64_t hooks = 1;
            for (int h : f.subtree_sizes()) hooks *= static_cast<std::uint64_t>(h);
            CHECK(f.natural_labeling_count() * hooks == checked_factorial(n));
        }
    }
}

TEST_CASE("natural labeling count overflow is reported") {
    CHECK_THROWS_AS(Forest::from_parents(std::vector<int>(24, 0)).natural_labeling_count(),
                    std::overflow_error);
}

TEST_CASE("natural labeling enumeration") {
    CHECK(all_natural_labelings(linear_tree(4)) ==
          std::vector<Labeling>{Labeling::of({1, 2, 3, 4})});
    CHECK(all_natural_labelings(Forest::from_parents({0, 0})) ==
          std::vector<Labeling>{Labeling::of({1, 2}), Labeling::of({2, 1})});

    const Forest fig1 = Forest::from_parents(kFig1Parents);
    const auto naturals = all_natural_labelings(fig1);
    CHECK(naturals.size() == 8);
    std::set<std::vector<int>> distinct;
    for (const Labeling& w : naturals) {
        distinct.insert(w.values());
        CHECK(w.is_natural(fig1));
        CHECK(w[3] > w[1]);
        CHECK(w[3] > w[2]);
        CHECK(w[5] == 5);
        CHECK(oracle::forest_inv(fig1.parents(), w.values()) == 0);
    }
    CHECK(distinct.size() == 8);

    // Stream agrees with the oracle on every small forest.
    for (int n = 1; n <= 5; ++n) {
        for (const Forest& f : enumerate_forests(n, true)) {
            std::set<std::vector<int>> got;
            for (const Labeling& w : all_natural_labelings(f)) got.insert(w.values());
            const auto expected = oracle::natural_labelings(f.parents());
            CHECK(got.size() == expected.size());
            for (const auto& vals : expected) CHECK(got.count(vals) == 1);
        }
    }
}

TEST_CASE("forest enumeration and poset dedup") {
    CHECK(enumerate_forests(1, false).size() == 1);
    CHECK(enumerate_forests(3, false).size() == 6);
    CHECK(enumerate_forests(4, false).size() == 24);
    CHECK(enumerate_forests(5, false).size() == 120);

    // Rooted-forest counts up to isomorphism.
    CHECK(enumerate_forests(1, true).size() == 1);
    CHECK(enumerate_forests(2, true).size() == 2);
    CHECK(enumerate_forests(3, true).size() == 4);
    CHECK(enumerate_forests(4, true).size() == 9);
    CHECK(enumerate_forests(5, true).size() == 20);
    CHECK(enumerate_forests(6, true).size() == 48);

    // Isomorphic parent arrays share a canonical key.
    CHECK(Forest::from_parents({3, 0, 0}).canonical_shape() ==
          Forest::from_parents({0, 3, 0}).canonical_shape());
    CHECK(Forest::from_parents({3, 3, 0}).canonical_shape() !=
          Forest::from_parents({2, 3, 0}).canonical_shape());
}

TEST_CASE("subtree extraction") {
    const Forest fig1 = Forest::from_parents(kFig1Parents);
    CHECK(fig1.subtree(3).parents() == std::vector<int>{3, 3, 0});
    CHECK(fig1.subtree(5).parents() == kFig1Parents);
    CHECK(fig1.subtree(1).parents() == std::vector<int>{0});
    CHECK(fig1.is_path() == false);
    CHECK(linear_tree(5).is_path());
}
