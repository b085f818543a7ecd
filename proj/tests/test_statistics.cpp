#include <doctest.h>

#include <algorithm>
#include <map>

#include "forestlab/statistics.hpp"
#include "oracles.hpp"

using namespace forestlab;

namespace {
const Forest kFig1 = Forest::from_parents({3, 3, 5, 5, 0});
const Labeling kFig1W = Labeling::of({3, -5, 1, -4, 2});
const Forest kFig3 = Forest::from_parents({4, 3, 4, 5, 0});
const Labeling kFig3W = Labeling::of({5, 3, 4, 2, 1});
}

TEST_CASE("inversion number") {
    CHECK(inv(kFig1, kFig1W) == 2);
    CHECK(inv(kFig1, Labeling::of({1, 2, 4, 3, 5})) == 0);
    // A path labeled bottom-to-top carries the word's inversion number.
    CHECK(inv(linear_tree(7), Labeling::of({2, 4, 1, 3, 5, 7, 6})) == 4);
    CHECK(oracle::word_inv({2, 4, 1, 3, 5, 7, 6}) == 4);
}

TEST_CASE("descents and major index") {
    const DescentInfo fig3 = des_maj(kFig3, kFig3W);
    CHECK(fig3.des == std::vector<int>{1, 3, 4});
    CHECK(fig3.maj == 7);

    CHECK(des_maj(kFig1, Labeling::of({1, 2, 4, 3, 5})).maj == 0);
    CHECK(des_maj(kFig1, Labeling::of({1, 2, 4, 3, 5})).des.empty());

    const DescentInfo fig1 = des_maj(kFig1, kFig1W);
    CHECK(fig1.des == std::vector<int>{1});
    CHECK(fig1.maj == 1);
}

TEST_CASE("negative-sum pairs") {
    CHECK(n_two(kFig1, kFig1W) == 3);
    CHECK(n_two(kFig1, Labeling::of({3, 5, 1, 4, 2})) == 0);
    // Entrywise negation of the Figure 1 labeling, and the all-negative one;
    // the all-negative case hits every comparable pair (there are six).
    CHECK(n_two(kFig1, Labeling::of({-3, 5, -1, 4, -2})) == 3);
    CHECK(n_two(kFig1, Labeling::of({-3, -5, -1, -4, -2})) == 6);
}

TEST_CASE("signed and even-signed inversion numbers") {
    CHECK(inv_b(kFig1, kFig1W) == 7);
    CHECK(inv_d(kFig1, kFig1W) == 5);
    CHECK(inv_b(kFig1, Labeling::of({1, 2, 4, 3, 5})) == 0);
    CHECK_THROWS_AS(inv_d(kFig1, Labeling::of({-3, 5, 1, 4, 2})), std::domain_error);
}

TEST_CASE("bottom-to-top maxima") {
    CHECK(btmax(kFig1, kFig1W, Variant::B) == std::vector<int>{1});
    CHECK(btmax(kFig1, kFig1W, Variant::D).empty());
    CHECK(btmax(kFig1, Labeling::of({1, 2, 4, 3, 5}), Variant::A) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(btmax(kFig1, kFig1W, Variant::A), std::domain_error);
    CHECK_THROWS_AS(btmax(kFig1, Labeling::of({-3, 5, 1, 4, 2}), Variant::D), std::domain_error);

    // Leaves are vacuously bottom-to-top maxima in variant A.
    for (const Forest& f : enumerate_forests(4, true)) {
        for_each_labeling(f, LabelClass::Unsigned, [&](const Labeling& w) {
            const std::vector<int> set = btmax(f, w, Variant::A);
            for (int v = 1; v <= 4; ++v)
                if (f.is_leaf(v)) CHECK(std::count(set.begin(), set.end(), v) == 1);
        });
    }
}

TEST_CASE("signed descents, maj_B, fmaj, rmaj") {
    const SignedDescentInfo s = des_b_maj_b(kFig1, kFig1W);
    CHECK(s.des_b == std::vector<int>{1, 5});
    CHECK(s.maj_b == 6);
    CHECK(s.positive_count == 3);
    CHECK(fmaj(kFig1, kFig1W) == 4);
    CHECK(rmaj(kFig1, kFig1W) == 9);

    // No positively labeled roots: Des_B collapses to Des.
    const Labeling all_neg = Labeling::of({-3, -5, -1, -4, -2});
    CHECK(des_b_maj_b(kFig1, all_neg).des_b == des_maj(kFig1, all_neg).des);

    // Unsigned natural labeling: Des_B is the root set, maj_B = n.
    const Labeling nat = Labeling::of({1, 2, 4, 3, 5});
    CHECK(des_b_maj_b(kFig1, nat).des_b == std::vector<int>{5});
    CHECK(des_b_maj_b(kFig1, nat).maj_b == 5);
    CHECK(fmaj(kFig1, nat) == 2 * des_maj(kFig1, nat).maj);
}

TEST_CASE("cyclic bottom-to-top maxima") {
    CHECK(cbtmax(kFig3, kFig3W, Variant::A) == std::vector<int>{1, 2, 3});
    CHECK(cbtmax(kFig1, kFig1W, Variant::B) == std::vector<int>{1, 3});
    CHECK(cbtmax(kFig1, Labeling::of({1, 2, 4, 3, 5}), Variant::A) ==
          std::vector<int>{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(cbtmax(kFig1, kFig1W, Variant::A), std::domain_error);
    CHECK_THROWS_AS(cbtmax(kFig1, kFig1W, Variant::D), std::domain_error);
}

TEST_CASE("statistic identities hold on every labeling, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const Forest& f : enumerate_forests(n, true)) {
            for_each_labeling(f, LabelClass::Signed, [&](const Labeling& w) {
                // Against the parent-walking oracles.
                CHECK(inv(f, w) == oracle::forest_inv(f.parents(), w.values()));
                CHECK(n_two(f, w) == oracle::forest_ntwo(f.parents(), w.values()));
                CHECK(inv_b(f, w) == inv(f, w) + w.negative_count() + n_two(f, w));
                if (w.is_even_signed()) CHECK(inv_d(f, w) == inv(f, w) + n_two(f, w));
                CHECK(fmaj(f, w) == 2 * des_maj(f, w).maj + w.negative_count());
                const SignedDescentInfo s = des_b_maj_b(f, w);
                CHECK(rmaj(f, w) == 2 * s.maj_b - s.positive_count);
                CHECK(s.positive_count + w.negative_count() == n);
                if (w.all_positive()) {
                    CHECK(inv_b(f, w) == inv(f, w));
                    CHECK(btmax(f, w, Variant::B) == btmax(f, w, Variant::A));
                    CHECK(cbtmax(f, w, Variant::B) == cbtmax(f, w, Variant::A));
                }
            });
        }
    }
}

TEST_CASE("inv and maj are equidistributed over each forest, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Forest& f : enumerate_forests(n, true)) {
            std::map<int, int> inv_hist, maj_hist;
            for_each_labeling(f, LabelClass::Unsigned, [&](const Labeling& w) {
                ++inv_hist[inv(f, w)];
                ++maj_hist[des_maj(f, w).maj];
            });
            CHECK(inv_hist == maj_hist);
        }
    }
}

TEST_CASE("stat record collects everything") {
    const StatRecord r = stat_record(kFig1, kFig1W);
    CHECK(r.inv == 2);
    CHECK(r.n1 == 2);
    CHECK(r.n2 == 3);
    CHECK(r.inv_b == 7);
    CHECK(r.inv_d.has_value());
    CHECK(*r.inv_d == 5);
    CHECK(r.maj == 1);
    CHECK(r.maj_b == 6);
    CHECK(r.fmaj == 4);
    CHECK(r.rmaj == 9);
    CHECK(r.btmax_b == std::vector<int>{1});
    CHECK(r.btmax_d.has_value());
    CHECK(r.btmax_d->empty());
    CHECK_FALSE(r.btmax_a.has_value());  // signed labeling has no A-variant stats

    const StatRecord nat = stat_record(kFig1, Labeling::of({1, 2, 4, 3, 5}));
    CHECK(nat.btmax_a.has_value());
    CHECK(nat.cbtmax_a.has_value());
    CHECK(nat.inv == 0);
}
