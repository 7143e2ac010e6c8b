#pragma once

// Verification suites: each check pins expected values and runs with exact
// integer comparisons (zero tolerance), with a wall-clock budget where one
// is part of the contract.

#include <string>
#include <vector>

namespace liecoh::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

CheckResult criterion_b2_witness();        // B2 (1,2,1) end-to-end, < 1 s
CheckResult criterion_euler_oracle();      // A2/B2/G2 alternating sums, < 1 min
CheckResult criterion_bwb_cross();         // closed form vs recursion, ranks <= 3, < 1 min
CheckResult criterion_demazure_weyl();     // dominant weights: H^0 only, dims agree
CheckResult criterion_nonsingular_roots(); // A2/A3/D4: which beta + rho are nonsingular
CheckResult criterion_simply_laced();      // A2/A3 vanishing sweep, < 5 min
CheckResult criterion_witness_nonzero();   // B2 (1,2,1) must NOT report vanishing
CheckResult criterion_word_independence(); // exact results agree across reduced words

// Suite tokens accepted by the CLI: euler, bwb, facts,
// simply-laced-vanishing, example-4-12.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name);
std::vector<CheckResult> run_all();

} // namespace liecoh::verify
