#pragma once

// alpha-string decomposition of nonnegative weight multisets, and the
// rank-one cohomology of a single string.
//
// A string models an indecomposable module for the Borel of the rank-one
// Levi attached to a simple root alpha: an irreducible (m+1)-dimensional
// piece tensored with a character chi, visible in the weight multiset as
// the chain top, top-alpha, ..., top-m*alpha.  The twist c = <chi,
// alpha^vee> = <top, alpha^vee> - m decides where its cohomology sits:
// degree 0 for c >= 0, nowhere for c = -1, degree 1 for c <= -2.

#include <string>
#include <vector>

#include "liecoh/graded.hpp"

namespace liecoh {

enum class DecomposeMode { Greedy, Strict };

struct AlphaString {
    Weight top;
    int size = 1;  // m + 1
    int alpha = 0; // simple index
    int twist = 0; // <top, alpha^vee> - m

    auto operator<=>(const AlphaString&) const = default;
};

struct StringDecomposition {
    std::vector<AlphaString> strings;
    bool ambiguous = false;
    std::string note;
};

// Greedy maximal-chain matching: repeatedly takes the unconsumed weight of
// maximal alpha-pairing and extends the chain downward while weights
// remain.  Strict mode additionally flags inputs whose multiset admits a
// different maximal-chain matching.  Requires nonnegative multiplicities.
StringDecomposition decompose(const RootSystem& rs, const FormalCharacter& f, int i,
                              DecomposeMode mode = DecomposeMode::Greedy);

FormalCharacter string_character(const RootSystem& rs, const AlphaString& s);

// Cohomology of the string over the rank-one flag line:
//   twist >= 0  -> degree 0 carries D_alpha(ch s)
//   twist = -1  -> zero
//   twist <= -2 -> degree 1 carries -D_alpha(ch s)
GradedCharacter sl2_cohomology(const RootSystem& rs, const AlphaString& s);

} // namespace liecoh
