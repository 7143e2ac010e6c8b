#include "liecoh/graded.hpp"

#include <stdexcept>

namespace liecoh {

const FormalCharacter& GradedCharacter::at(int d) const {
    static const FormalCharacter empty;
    auto it = degrees.find(d);
    return it == degrees.end() ? empty : it->second;
}

bool GradedCharacter::is_zero() const {
    for (const auto& [d, f] : degrees)
        if (!f.empty())
            return false;
    return true;
}

bool GradedCharacter::concentrated_in_degree_zero() const {
    for (const auto& [d, f] : degrees)
        if (d >= 1 && !f.empty())
            return false;
    return true;
}

int GradedCharacter::max_degree() const {
    int m = -1;
    for (const auto& [d, f] : degrees)
        if (!f.empty())
            m = d;
    return m;
}

FormalCharacter GradedCharacter::euler() const {
    FormalCharacter e;
    for (const auto& [d, f] : degrees) {
        if (d % 2 == 0)
            e += f;
        else
            e -= f;
    }
    return e;
}

void GradedCharacter::add(int degree, const FormalCharacter& f) {
    if (degree < 0)
        throw std::logic_error("negative cohomological degree");
    if (f.empty())
        return;
    degrees[degree] += f;
}

void GradedCharacter::trim() {
    for (auto it = degrees.begin(); it != degrees.end();)
        it = it->second.empty() ? degrees.erase(it) : std::next(it);
    for (auto it = lower.begin(); it != lower.end();)
        it = it->second.empty() ? lower.erase(it) : std::next(it);
}

GradedCharacter GradedCharacter::concentrated(int degree, FormalCharacter f) {
    GradedCharacter g;
    g.add(degree, f);
    return g;
}

void GradedCharacter::demote(std::map<int, FormalCharacter> lower_estimate) {
    exact = false;
    lower = std::move(lower_estimate);
    trim();
}

std::map<int, FormalCharacter> GradedCharacter::adjacent_cancellation() const {
    std::map<int, FormalCharacter> out = degrees;
    int top = max_degree();
    for (int d = 0; d < top; ++d) {
        auto lo = out.find(d), hi = out.find(d + 1);
        if (lo == out.end() || hi == out.end())
            continue;
        FormalCharacter cut;
        for (const auto& [w, m] : lo->second.terms()) {
            long long other = hi->second.mult(w);
            if (m > 0 && other > 0)
                cut.add(w, std::min(m, other));
        }
        lo->second -= cut;
        hi->second -= cut;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

} // namespace liecoh
