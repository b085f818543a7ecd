// Compares the serial reference enumeration kernels against the OpenMP ones
// on a few forest shapes and labeling classes, checking that both produce
// identical polynomials.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "forestlab/forestlab.hpp"

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

// Complete binary tree, heap layout reversed so indexing is natural.
forestlab::Forest binary_tree(int n) {
    std::vector<int> parents(n);
    for (int i = 2; i <= n; ++i) parents[n - i] = n + 1 - i / 2;
    parents[n - 1] = 0;
    return forestlab::Forest::from_parents(parents);
}

struct Case {
    std::string name;
    forestlab::Forest forest;
    forestlab::LabelClass cls;
    forestlab::StatPair pair;
};

}  // namespace

int main(int argc, char** argv) {
    using namespace forestlab;
    int unsigned_n = 9;
    int signed_n = 6;
    int repeats = 3;
    if (argc > 1) unsigned_n = std::stoi(argv[1]);
    if (argc > 2) signed_n = std::stoi(argv[2]);
    if (argc > 3) repeats = std::stoi(argv[3]);

    std::vector<Case> cases;
    cases.push_back({"path-unsigned-inv-btmax", linear_tree(unsigned_n), LabelClass::Unsigned,
                     StatPair::InvBtmax});
    cases.push_back({"tree-unsigned-maj-cbtmax", binary_tree(unsigned_n), LabelClass::Unsigned,
                     StatPair::MajCbtmax});
    cases.push_back(
        {"path-signed-invb-btmaxb", linear_tree(signed_n), LabelClass::Signed, StatPair::InvBBtmaxBWithN1});
    cases.push_back(
        {"tree-signed-sorb-cycb", binary_tree(signed_n), LabelClass::Signed, StatPair::SorBCycB});

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %12s %10s %10s %8s %6s\n", "case", "labelings", "serial_s", "parallel_s",
                "speedup", "equal");

    for (const Case& c : cases) {
        const std::uint64_t count = labeling_count(c.forest.size(), c.cls);
        double best_serial = 1e300, best_parallel = 1e300;
        MultiPoly serial, parallel;
        for (int r = 0; r < repeats; ++r) {
            double t0 = now();
            serial = distribution_serial(c.forest, c.cls, c.pair);
            double t1 = now();
            parallel = distribution_parallel(c.forest, c.cls, c.pair);
            double t2 = now();
            best_serial = std::min(best_serial, t1 - t0);
            best_parallel = std::min(best_parallel, t2 - t1);
        }
        const bool equal = poly_equal(serial, parallel);
        std::printf("%-28s %12llu %10.4f %10.4f %7.2fx %6s\n", c.name.c_str(),
                    static_cast<unsigned long long>(count), best_serial, best_parallel,
                    best_serial / best_parallel, equal ? "yes" : "NO");
        if (!equal) return 1;
    }
    return 0;
}
