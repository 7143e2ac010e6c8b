#include "liecoh/character.hpp"

#include <numeric>
#include <stdexcept>

namespace liecoh {

FormalCharacter::FormalCharacter(std::map<Weight, long long> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

FormalCharacter FormalCharacter::monomial(const Weight& w, long long mult) {
    FormalCharacter f;
    f.add(w, mult);
    return f;
}

long long FormalCharacter::mult(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

bool FormalCharacter::nonnegative() const {
    for (const auto& [w, m] : terms_)
        if (m < 0)
            return false;
    return true;
}

long long FormalCharacter::dimension() const {
    if (!nonnegative())
        throw std::logic_error("dimension() called on a signed character; use signed_dimension()");
    long long d = 0;
    for (const auto& [w, m] : terms_)
        d += m;
    return d;
}

long long FormalCharacter::signed_dimension() const {
    long long d = 0;
    for (const auto& [w, m] : terms_)
        d += m;
    return d;
}

void FormalCharacter::add(const Weight& w, long long mult) {
    if (mult == 0)
        return;
    auto [it, inserted] = terms_.emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (const auto& [w, m] : o.terms_)
        add(w, m);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    for (const auto& [w, m] : o.terms_)
        add(w, -m);
    return *this;
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
    FormalCharacter out = *this;
    out += o;
    return out;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const {
    FormalCharacter out = *this;
    out -= o;
    return out;
}

FormalCharacter FormalCharacter::operator-() const {
    FormalCharacter out;
    for (const auto& [w, m] : terms_)
        out.add(w, -m);
    return out;
}

FormalCharacter demazure_op(const RootSystem& rs, const FormalCharacter& f, int i) {
    if (i < 0 || i >= rs.rank())
        throw std::invalid_argument("simple-root index out of range");
    FormalCharacter out;
    const Weight alpha = rs.alpha(i);
    for (const auto& [lambda, m] : f.terms()) {
        check_weight(rs, lambda);
        int n = lambda[i];
        if (n >= 0) {
            Weight w = lambda;
            for (int k = 0; k <= n; ++k) {
                out.add(w, m);
                for (int t = 0; t < rs.rank(); ++t)
                    w[t] -= alpha[t];
            }
        } else if (n <= -2) {
            Weight w = lambda;
            for (int k = 1; k <= -n - 1; ++k) {
                for (int t = 0; t < rs.rank(); ++t)
                    w[t] += alpha[t];
                out.add(w, -m);
            }
        }
    }
    return out;
}

FormalCharacter demazure_char(const RootSystem& rs, const ReducedWord& word, const Weight& lambda) {
    check_weight(rs, lambda);
    if (!is_reduced(rs, word))
        throw std::invalid_argument("word is not reduced");
    FormalCharacter f = FormalCharacter::monomial(lambda);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        f = demazure_op(rs, f, *it);
    return f;
}

FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda) {
    check_weight(rs, lambda);
    if (!rs.dominant(lambda))
        throw std::invalid_argument("weyl_character requires a dominant weight");
    return demazure_char(rs, w0_word(rs), lambda);
}

long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    check_weight(rs, lambda);
    if (!rs.dominant(lambda))
        throw std::invalid_argument("weyl_dim requires a dominant weight");
    Weight shifted = lambda;
    for (int k = 0; k < rs.rank(); ++k)
        shifted[k] += 1;
    std::vector<long long> num, den;
    for (const Root& beta : rs.positive_roots()) {
        num.push_back(rs.pairing(shifted, beta));
        den.push_back(rs.pairing(rs.rho(), beta));
    }
    // Cancel denominators into the numerator list; the quotient is integral.
    for (long long& d : den) {
        for (long long& x : num) {
            if (d == 1)
                break;
            long long g = std::gcd(x, d);
            x /= g;
            d /= g;
        }
        if (d != 1)
            throw std::logic_error("dimension product failed to cancel");
    }
    long long result = 1;
    for (long long x : num) {
        __int128 r = static_cast<__int128>(result) * x;
        if (r > static_cast<__int128>(9'000'000'000'000'000'000LL))
            throw std::overflow_error("dimension exceeds the supported integer range");
        result = static_cast<long long>(r);
    }
    return result;
}

} // namespace liecoh
