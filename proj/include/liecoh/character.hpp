#pragma once

// The character ring Z[X(T)]: finitely supported integer multisets of
// weights, Demazure operators, Demazure and Weyl characters.

#include <map>

#include "liecoh/root_system.hpp"
#include "liecoh/weyl.hpp"

namespace liecoh {

class FormalCharacter {
  public:
    FormalCharacter() = default;
    explicit FormalCharacter(std::map<Weight, long long> terms);
    static FormalCharacter monomial(const Weight& w, long long mult = 1);

    const std::map<Weight, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    long long mult(const Weight& w) const;
    bool nonnegative() const;

    // Total dimension; requires nonnegative multiplicities.
    long long dimension() const;
    long long signed_dimension() const;

    void add(const Weight& w, long long mult);
    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter operator+(const FormalCharacter& o) const;
    FormalCharacter operator-(const FormalCharacter& o) const;
    FormalCharacter operator-() const;
    bool operator==(const FormalCharacter& o) const = default;

    // Applies a map to every weight, preserving multiplicities.
    template <typename F>
    FormalCharacter map_weights(F&& f) const {
        FormalCharacter out;
        for (const auto& [w, m] : terms_)
            out.add(f(w), m);
        return out;
    }

  private:
    std::map<Weight, long long> terms_; // zero entries absent
};

// Divided-difference (Demazure) operator D_i, extended linearly:
//   n = <lambda, alpha_i^vee> >= 0  ->  sum_{k=0..n} e^{lambda - k alpha_i}
//   n = -1                          ->  0
//   n <= -2                         ->  - sum_{k=1..-n-1} e^{lambda + k alpha_i}
FormalCharacter demazure_op(const RootSystem& rs, const FormalCharacter& f, int i);

// D_{i_1} ... D_{i_r} e^lambda, rightmost letter applied first.  This is
// the Euler characteristic of the lambda-line bundle over the tower of the
// word.  The word must be reduced.
FormalCharacter demazure_char(const RootSystem& rs, const ReducedWord& word, const Weight& lambda);

// Character of the irreducible module of highest weight lambda (dominant).
FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda);

// Dimension by the product formula over positive roots.
long long weyl_dim(const RootSystem& rs, const Weight& lambda);

} // namespace liecoh
