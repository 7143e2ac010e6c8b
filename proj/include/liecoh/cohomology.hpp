#pragma once

// Graded cohomology of line bundles and weight-module coefficients over
// towers of rank-one fibrations, by right-to-left string recursion, plus
// the closed form on the full flag variety.

#include "liecoh/strings.hpp"

namespace liecoh {

// H^*(tower of `word`, line bundle of `lambda`).  Starts with lambda in
// degree zero and processes the word from the rightmost letter: each
// degree's character is decomposed into alpha-strings, and every string
// contributes its rank-one cohomology to the same degree (twist >= 0) or
// the next one (twist <= -2).  The status degrades to Bounds when a
// decomposition was flagged ambiguous, or when one step sends overlapping
// weight supports into adjacent degrees, in which case connecting maps
// cannot be excluded weight-wise.
GradedCharacter h_line_bundle(const RootSystem& rs, const ReducedWord& word, const Weight& lambda,
                              DecomposeMode mode = DecomposeMode::Greedy);

// Same engine with an arbitrary nonnegative character in degree zero.
GradedCharacter h_module_coefficients(const RootSystem& rs, const ReducedWord& word,
                                      const FormalCharacter& module,
                                      DecomposeMode mode = DecomposeMode::Greedy);

// Closed form on the full flag variety: zero when lambda + rho is
// singular; otherwise the single degree index(lambda + rho) carries the
// irreducible character of the dominant representative of the shifted
// orbit.  Always exact.
GradedCharacter h_full_flag(const RootSystem& rs, const Weight& lambda);

} // namespace liecoh
