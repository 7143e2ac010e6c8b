#pragma once

// Checker for the automorphism and deformation criteria of a twisted
// variety E = G x_B F fibered over the full flag variety with fiber F.
// The fiber enters only through weight data: the characters of
// H^0(F, Theta_F) and H^1(F, Theta_F) and the promise that the higher
// structure-sheaf cohomology of F vanishes.
//
// The criteria checked:
//   (i)  H^0(G/B, H^0(F, Theta_F)) = 0        =>  Aut^0(E) = G
//   (ii) given structure vanishing and H^j(G/B, H^0(F, Theta_F)) = 0 for
//        j = 1, 2:  H^1(E, Theta_E) = H^0(G/B, H^1(F, Theta_F))
// In all cases Lie(Aut^0(E)) splits as the kernel character plus the
// adjoint representation.

#include <optional>
#include <string>
#include <vector>

#include "liecoh/tangent.hpp"

namespace liecoh {

struct FiberData {
    FormalCharacter h0_theta;                 // character of H^0(F, Theta_F)
    std::optional<FormalCharacter> h1_theta;  // character of H^1(F, Theta_F)
    bool structure_vanishing = false;         // H^j(F, O_F) = 0 for j >= 1
    std::string label;
};

enum class Aut0Kind { ExactlyG, Inconclusive };

struct TwistedReport {
    Aut0Kind aut0 = Aut0Kind::Inconclusive;
    FormalCharacter kernel_character;            // Lie(ker pi_*); empty iff ExactlyG
    FormalCharacter lie_aut0_character;          // kernel + adjoint
    std::optional<GradedCharacter> h1_twisted;   // H^1(E, Theta_E) when determined
    std::string h1_reason;                       // failing hypothesis otherwise
    std::vector<std::string> citations;
    std::string notes;

    bool h1_determined() const { return h1_twisted.has_value(); }
};

TwistedReport check_twisted(const RootSystem& rs, const FiberData& fiber,
                            DecomposeMode mode = DecomposeMode::Greedy);

// Report for the twisted Schubert variety of w.  The parabolic-vanishing
// ingredient H^j(G/B, p_{I(w)}) = 0 (j = 0, 1, 2) is machine-verified; the
// kernel-module half of the surjectivity argument is recorded as an
// assumption.  Simply-laced types only.
TwistedReport twisted_schubert_report(const RootSystem& rs, const WeylElt& w,
                                      DecomposeMode mode = DecomposeMode::Greedy);

// Report for the twisted tower of a reduced word: computes the tangent
// cohomology of the tower and feeds it through check_twisted.
TwistedReport twisted_bsdh_report(const RootSystem& rs, const ReducedWord& word,
                                  DecomposeMode mode = DecomposeMode::Greedy);

} // namespace liecoh
