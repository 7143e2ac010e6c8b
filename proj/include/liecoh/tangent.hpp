#pragma once

// Tangent-sheaf weight data: the tangent module of the full flag variety,
// parabolic subalgebra weight models, the orthogonality set of a word, the
// Schubert stabilizer, and tangent-sheaf cohomology of the fibration tower
// of a reduced word.

#include <set>

#include "liecoh/cohomology.hpp"

namespace liecoh {

// Weights of g/b: every positive root once (the Borel is the negative one).
FormalCharacter g_mod_b_weights(const RootSystem& rs);

// Weights of the parabolic subalgebra p_J: zero with multiplicity rank,
// all negative roots, and the positive roots supported on J.
FormalCharacter p_j_weights(const RootSystem& rs, const std::set<int>& j);

// Weights of g: zero with multiplicity rank plus all roots.
FormalCharacter adjoint_weights(const RootSystem& rs);

// Letters whose simple root is orthogonal to every earlier letter of the
// word (the first letter vacuously qualifies).
std::set<int> j_set(const RootSystem& rs, const ReducedWord& word);

// Stabilizer of the Schubert variety of w: the left-descent set of w.
std::set<int> schubert_stabilizer(const RootSystem& rs, const WeylElt& w);

// H^*(Z, Theta_Z) for the tower Z of a reduced word, by recursion on the
// last letter: the relative tangent line contributes H^*(word, alpha_last)
// and the base contributes its own tangent cohomology unchanged along the
// rank-one fibration.  The two parts combine as direct summands where, for
// every weight, the base part in degree j and the line part in degree j+1
// have disjoint supports; elsewhere the status drops to Bounds.
GradedCharacter bsdh_tangent(const RootSystem& rs, const ReducedWord& word,
                             DecomposeMode mode = DecomposeMode::Greedy);

struct ParabolicBoundReport {
    bool pass = false;
    std::set<int> j;           // j_set of the word
    FormalCharacter excess;    // H^0 weights not accounted for by p_J
    FormalCharacter h0;
};

// Checks that the computed H^0(Z, Theta_Z) is a sub-multiset of the
// weights of p_{j_set(word)}, as it must be when H^0 is a quotient of
// that parabolic.  Simply-laced types only.
ParabolicBoundReport h0_parabolic_check(const RootSystem& rs, const ReducedWord& word,
                                        DecomposeMode mode = DecomposeMode::Greedy);

} // namespace liecoh
