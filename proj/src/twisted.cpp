#include "liecoh/twisted.hpp"

#include <stdexcept>

namespace liecoh {

namespace {

void finish_splitting(const RootSystem& rs, TwistedReport& rep) {
    rep.lie_aut0_character = rep.kernel_character + adjoint_weights(rs);
    // Lie(Aut^0(E)) = Lie(ker pi_*) + g; the dimensions must agree.
    long long lhs = rep.lie_aut0_character.dimension();
    long long rhs = rep.kernel_character.dimension() + adjoint_weights(rs).dimension();
    if (lhs != rhs)
        throw std::logic_error("splitting bookkeeping failed the dimension identity");
}

} // namespace

TwistedReport check_twisted(const RootSystem& rs, const FiberData& fiber, DecomposeMode mode) {
    if (!fiber.h0_theta.nonnegative() ||
        (fiber.h1_theta && !fiber.h1_theta->nonnegative()))
        throw std::invalid_argument("fiber tangent characters must be nonnegative");

    TwistedReport rep;
    ReducedWord w0 = w0_word(rs);
    GradedCharacter base = h_module_coefficients(rs, w0, fiber.h0_theta, mode);

    if (base.exact && base.at(0).empty()) {
        rep.aut0 = Aut0Kind::ExactlyG;
        rep.citations.push_back(
            "H^0(G/B, H^0(F, Theta_F)) = 0 forces Aut^0(E) = G: the relative tangent sheaf has no "
            "global sections, so Lie(Aut^0(E)) = g");
    } else {
        rep.aut0 = Aut0Kind::Inconclusive;
        rep.kernel_character = base.at(0);
        if (!base.exact)
            rep.notes += "degree-0 sections were not certified exact by the engine; ";
        rep.citations.push_back(
            "Lie(ker pi_*) = H^0(E, relative tangent sheaf) = H^0(G/B, H^0(F, Theta_F))");
    }

    if (!base.exact) {
        rep.h1_reason = "engine could not certify exactness of H^*(G/B, H^0(F, Theta_F))";
    } else if (!base.at(1).empty()) {
        rep.h1_reason = "H^1(G/B, H^0(F, Theta_F)) != 0";
    } else if (!base.at(2).empty()) {
        rep.h1_reason = "H^2(G/B, H^0(F, Theta_F)) != 0";
    } else if (!fiber.structure_vanishing) {
        rep.h1_reason = "vanishing of H^j(F, O_F) for j >= 1 was not asserted";
    } else if (!fiber.h1_theta) {
        rep.h1_reason = "H^1(F, Theta_F) was not provided";
    } else {
        GradedCharacter transfer = h_module_coefficients(rs, w0, *fiber.h1_theta, mode);
        if (!transfer.exact) {
            rep.h1_reason = "engine could not certify exactness of H^0(G/B, H^1(F, Theta_F))";
        } else {
            GradedCharacter h1 = GradedCharacter::concentrated(0, transfer.at(0));
            rep.h1_twisted = std::move(h1);
            rep.citations.push_back(
                "with H^j(F, O_F) = 0 (j >= 1) and H^j(G/B, H^0(F, Theta_F)) = 0 (j = 1, 2): "
                "H^1(E, Theta_E) = H^0(G/B, H^1(F, Theta_F))");
        }
    }
    if (!rep.h1_determined() && fiber.h1_theta && base.exact) {
        // Still record the would-be right-hand side for the reader.
        GradedCharacter transfer = h_module_coefficients(rs, w0, *fiber.h1_theta, mode);
        if (transfer.exact)
            rep.notes += "H^0(G/B, H^1(F, Theta_F)) has dimension " +
                         std::to_string(transfer.at(0).dimension()) +
                         " (the transfer identity itself was not certified); ";
    }

    finish_splitting(rs, rep);
    return rep;
}

TwistedReport twisted_schubert_report(const RootSystem& rs, const WeylElt& w, DecomposeMode mode) {
    if (!rs.simply_laced())
        throw std::domain_error("twisted Schubert reports are restricted to simply-laced types");

    TwistedReport rep;
    WeylElt w0 = longest_element(rs);
    if (w == w0) {
        // The fiber is the full flag variety, so the twisted variety is a
        // product of two copies and the identity component is G x G.
        rep.aut0 = Aut0Kind::Inconclusive;
        rep.kernel_character = adjoint_weights(rs);
        rep.h1_reason = "fiber is the full flag variety; H^j of its tangent sheaf vanishes for "
                        "j >= 1 and the automorphism group is the product";
        rep.notes = "Aut^0 is G x G in this case; the kernel of the projection action is a second "
                    "copy of G";
        rep.citations.push_back("H^0(G/B, Theta_{G/B}) = g, so Lie(ker pi_*) = g");
        finish_splitting(rs, rep);
        return rep;
    }

    std::set<int> stab = schubert_stabilizer(rs, w);
    FormalCharacter p = p_j_weights(rs, stab);
    GradedCharacter hp = h_module_coefficients(rs, w0_word(rs), p, mode);
    bool ingredient = hp.exact && hp.at(0).empty() && hp.at(1).empty() && hp.at(2).empty();

    if (ingredient) {
        rep.aut0 = Aut0Kind::ExactlyG;
        rep.citations.push_back(
            "verified: H^j(G/B, p_I(w)) = 0 for j = 0, 1, 2 with I(w) the left-descent set");
        rep.citations.push_back(
            "assumed: H^0(X(w), Theta) is a quotient of p_I(w) by a kernel whose induced "
            "cohomology on G/B vanishes in degrees 1..3 (simply-laced Schubert stabilizer "
            "argument)");
        rep.notes = "Aut^0 of the twisted Schubert variety equals G";
    } else {
        rep.aut0 = Aut0Kind::Inconclusive;
        rep.kernel_character = hp.at(0);
        rep.notes = "the parabolic-vanishing ingredient failed or was not certified";
    }
    rep.h1_reason = "H^1(X(w), Theta_X(w)) is an external input; when available, "
                    "H^1 of the twisted variety equals H^0(G/B, H^1(X(w), Theta_X(w)))";
    finish_splitting(rs, rep);
    return rep;
}

TwistedReport twisted_bsdh_report(const RootSystem& rs, const ReducedWord& word, DecomposeMode mode) {
    GradedCharacter theta = bsdh_tangent(rs, word, mode);
    FiberData fiber;
    fiber.label = "tower of a reduced word";
    // Towers of rank-one fibrations have vanishing higher structure-sheaf
    // cohomology; asserted as fiber data.
    fiber.structure_vanishing = true;
    if (theta.exact) {
        fiber.h0_theta = theta.at(0);
        fiber.h1_theta = theta.at(1);
    } else {
        fiber.h0_theta = theta.at(0);
    }
    TwistedReport rep = check_twisted(rs, fiber, mode);
    if (!theta.exact) {
        rep.h1_twisted.reset();
        rep.h1_reason = "tangent cohomology of the tower was not certified exact";
    }
    return rep;
}

} // namespace liecoh
