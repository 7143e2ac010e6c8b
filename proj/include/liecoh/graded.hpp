#pragma once

// Degree-indexed families of nonnegative characters with an exactness
// status.  This is the engine's model of graded cohomology: `degrees`
// holds the direct-sum estimate; when `exact` is false the result was not
// certified and `lower`/`upper` (== degrees) record the estimate after and
// before maximal adjacent-degree cancellation.  lower <= upper termwise
// and both carry the same Euler characteristic.  Consumers must treat a
// non-exact result as a refusal, not as a certified interval.

#include <map>

#include "liecoh/character.hpp"

namespace liecoh {

struct GradedCharacter {
    std::map<int, FormalCharacter> degrees;
    bool exact = true;
    std::map<int, FormalCharacter> lower; // empty unless !exact

    const FormalCharacter& at(int d) const;
    bool is_zero() const;
    // Nonzero only in degrees 0..max; true when every degree >= 1 is empty.
    bool concentrated_in_degree_zero() const;
    int max_degree() const; // -1 when zero

    // Alternating sum over degrees (signed character).
    FormalCharacter euler() const;

    void add(int degree, const FormalCharacter& f);
    void trim(); // drop empty degree slots

    bool operator==(const GradedCharacter& o) const = default;

    static GradedCharacter zero() { return {}; }
    static GradedCharacter concentrated(int degree, FormalCharacter f);

    // Marks the result as Bounds with the given lower estimate.
    void demote(std::map<int, FormalCharacter> lower_estimate);

    // Maximal adjacent-degree cancellation of `degrees`: repeatedly removes
    // min(m_d, m_{d+1}) at every weight shared by adjacent degrees, from the
    // bottom degree up.  Preserves the Euler characteristic.
    std::map<int, FormalCharacter> adjacent_cancellation() const;
};

} // namespace liecoh
