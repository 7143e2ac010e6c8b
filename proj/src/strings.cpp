#include "liecoh/strings.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

struct OpenChain {
    Weight top;
    int size = 1;
};

struct LineEntry {
    int pairing = 0;
    Weight weight;
    long long mult = 0;
};

} // namespace

StringDecomposition decompose(const RootSystem& rs, const FormalCharacter& f, int i,
                              DecomposeMode mode) {
    if (i < 0 || i >= rs.rank())
        throw std::invalid_argument("simple-root index out of range");
    if (!f.nonnegative())
        throw std::invalid_argument("decompose requires nonnegative multiplicities");

    const Weight alpha = rs.alpha(i);
    const int n = rs.rank();

    // Group by alpha-line.  The key 2*lambda - <lambda,alpha^vee>*alpha is
    // invariant under translation by alpha, so it identifies the line.
    std::map<Weight, std::vector<LineEntry>> lines;
    for (const auto& [w, m] : f.terms()) {
        check_weight(rs, w);
        Weight key(n);
        for (int t = 0; t < n; ++t)
            key[t] = 2 * w[t] - w[i] * alpha[t];
        lines[key].push_back(LineEntry{w[i], w, m});
    }

    StringDecomposition out;
    bool ambiguous = false;
    for (auto& [key, entries] : lines) {
        std::sort(entries.begin(), entries.end(),
                  [](const LineEntry& a, const LineEntry& b) { return a.pairing > b.pairing; });
        std::vector<OpenChain> open; // start order; newest at the back
        auto close_from_back = [&](size_t count) {
            for (size_t k = 0; k < count; ++k) {
                OpenChain c = open.back();
                open.pop_back();
                out.strings.push_back(AlphaString{c.top, c.size, i, c.top[i] - (c.size - 1)});
            }
        };
        int prev_pairing = 0;
        bool first = true;
        for (const LineEntry& e : entries) {
            if (!first && e.pairing != prev_pairing - 2)
                close_from_back(open.size()); // gap in the chain ladder
            first = false;
            prev_pairing = e.pairing;
            long long o = static_cast<long long>(open.size());
            if (e.mult >= o) {
                for (OpenChain& c : open)
                    ++c.size;
                for (long long k = 0; k < e.mult - o; ++k)
                    open.push_back(OpenChain{e.weight, 1});
            } else {
                // Some chains must end just above this weight.  Different
                // choices of which ones end give different maximal
                // matchings exactly when the open tops are not all equal.
                if (e.mult > 0) {
                    bool tops_equal = std::all_of(open.begin(), open.end(), [&](const OpenChain& c) {
                        return c.top == open.front().top;
                    });
                    if (!tops_equal)
                        ambiguous = true;
                }
                close_from_back(open.size() - e.mult);
                for (OpenChain& c : open)
                    ++c.size;
            }
        }
        close_from_back(open.size());
    }

    std::sort(out.strings.begin(), out.strings.end());
    if (mode == DecomposeMode::Strict && ambiguous) {
        out.ambiguous = true;
        out.note = "weight multiset admits more than one maximal-chain matching";
    }
    return out;
}

FormalCharacter string_character(const RootSystem& rs, const AlphaString& s) {
    FormalCharacter f;
    const Weight alpha = rs.alpha(s.alpha);
    Weight w = s.top;
    for (int k = 0; k < s.size; ++k) {
        f.add(w, 1);
        for (int t = 0; t < rs.rank(); ++t)
            w[t] -= alpha[t];
    }
    return f;
}

GradedCharacter sl2_cohomology(const RootSystem& rs, const AlphaString& s) {
    GradedCharacter g;
    if (s.twist == -1)
        return g;
    FormalCharacter d = demazure_op(rs, string_character(rs, s), s.alpha);
    if (s.twist >= 0) {
        g.add(0, d);
    } else {
        FormalCharacter h1 = -d;
        if (!h1.nonnegative())
            throw std::logic_error("degree-one string cohomology came out signed");
        g.add(1, h1);
    }
    return g;
}

} // namespace liecoh
