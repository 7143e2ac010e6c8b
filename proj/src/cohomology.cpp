#include "liecoh/cohomology.hpp"

#include <stdexcept>

namespace liecoh {

namespace {

bool supports_intersect(const FormalCharacter& a, const FormalCharacter& b) {
    for (const auto& [w, m] : a.terms())
        if (b.mult(w) != 0)
            return true;
    return false;
}

GradedCharacter run_engine(const RootSystem& rs, const ReducedWord& word, FormalCharacter start,
                           DecomposeMode mode) {
    if (!is_reduced(rs, word))
        throw std::invalid_argument("word is not reduced");
    if (!start.nonnegative())
        throw std::invalid_argument("coefficient character must be nonnegative");

    std::map<int, FormalCharacter> state;
    if (!start.empty())
        state[0] = std::move(start);
    bool certified = true;

    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        const int i = *it;
        std::map<int, FormalCharacter> next;
        for (const auto& [d, f] : state) {
            StringDecomposition dec = decompose(rs, f, i, mode);
            if (dec.ambiguous)
                certified = false;
            FormalCharacter same_degree, next_degree;
            for (const AlphaString& s : dec.strings) {
                if (s.twist == -1)
                    continue;
                GradedCharacter h = sl2_cohomology(rs, s);
                same_degree += h.at(0);
                next_degree += h.at(1);
            }
            // One step splits f into pieces landing in degrees d and d+1;
            // a shared weight there leaves connecting maps unresolved.
            if (supports_intersect(same_degree, next_degree))
                certified = false;
            if (!same_degree.empty())
                next[d] += same_degree;
            if (!next_degree.empty())
                next[d + 1] += next_degree;
        }
        for (auto jt = next.begin(); jt != next.end();)
            jt = jt->second.empty() ? next.erase(jt) : std::next(jt);
        state = std::move(next);
    }

    GradedCharacter out;
    out.degrees = std::move(state);
    out.trim();
    if (!certified)
        out.demote(out.adjacent_cancellation());
    return out;
}

} // namespace

GradedCharacter h_line_bundle(const RootSystem& rs, const ReducedWord& word, const Weight& lambda,
                              DecomposeMode mode) {
    check_weight(rs, lambda);
    return run_engine(rs, word, FormalCharacter::monomial(lambda), mode);
}

GradedCharacter h_module_coefficients(const RootSystem& rs, const ReducedWord& word,
                                      const FormalCharacter& module, DecomposeMode mode) {
    return run_engine(rs, word, module, mode);
}

GradedCharacter h_full_flag(const RootSystem& rs, const Weight& lambda) {
    check_weight(rs, lambda);
    Weight shifted = lambda;
    for (int k = 0; k < rs.rank(); ++k)
        shifted[k] += 1;
    if (rs.is_singular(shifted))
        return GradedCharacter::zero();
    int degree = 0;
    Weight cur = shifted;
    while (!rs.dominant(cur)) {
        for (int k = 0; k < rs.rank(); ++k)
            if (cur[k] < 0) {
                cur = rs.reflect(cur, k);
                break;
            }
        ++degree;
    }
    for (int k = 0; k < rs.rank(); ++k)
        cur[k] -= 1;
    return GradedCharacter::concentrated(degree, weyl_character(rs, cur));
}

} // namespace liecoh
