// Acceptance suite: runs every top-level criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "spinclif/checks.hpp"

using namespace spinclif;

namespace {

struct Criterion {
    std::string label;
    std::function<std::vector<CheckResult>(ContextCache&)> run;
};

int run_all(const std::vector<Criterion>& criteria) {
    ContextCache cache;
    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        bool pass = true;
        std::string detail;
        try {
            results = c.run(cache);
            for (const auto& r : results)
                if (!r.pass) {
                    pass = false;
                    detail += (detail.empty() ? "" : ", ") + r.name;
                    if (!r.value.empty()) detail += " [" + r.value + "]";
                }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.label << "  (" << results.size()
                  << " checks, " << secs << " s)";
        if (!pass) std::cout << "  failing: " << detail;
        std::cout << std::endl;
        if (!pass) ++failures;
    }
    return failures;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1. multipole properties (eigen/symmetry/contraction, k <= 4, exact)",
         [](ContextCache&) { return suite_multipoles(4); }},
        {"2. strong Clifford spin-1/2 structure (exact)",
         [](ContextCache& cache) { return suite_clifford_spin_half(cache); }},
        {"3. third-order closure constraint solution (exact)",
         [](ContextCache&) { return suite_f_constraint(); }},
        {"4. reflection-calculus identities, signatures (3,0),(1,1),(1,3) (exact, 200+ cases)",
         [](ContextCache&) { return suite_reflections(11, 200); }},
        {"5. spinless weak Clifford algebra at D=6, H=2 with stabilization audit (exact)",
         [](ContextCache& cache) { return suite_weak_spinless(cache, 6, 2); }},
        {"6. spin-1/2 (D=6) and spin-1 (D=8) weak Clifford algebras (exact)",
         [](ContextCache& cache) {
             auto results = suite_spin_weak(cache, HalfInt(1), 6);
             auto more = suite_spin_weak(cache, HalfInt(2), 8);
             results.insert(results.end(), more.begin(), more.end());
             return results;
         }},
        {"7. extended-metric values and monopole identities (exact)",
         [](ContextCache&) { return suite_metric(); }},
        {"8. spin-0 algebra: commutativity, dims 1 4 10 20, metric zeros (exact)",
         [](ContextCache& cache) { return suite_spin_zero(cache); }},
        {"9. representation oracle: ideal vanishing, span ranks (tolerances 1e-9/1e-6)",
         [](ContextCache&) { return suite_rep(); }},
        {"10. cross-oracle: symbolic reduction vs spin matrices (residual < 1e-9)",
         [](ContextCache& cache) { return suite_cross_oracle(cache); }},
    };
    int failures = run_all(criteria);
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
