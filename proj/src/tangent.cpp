#include "liecoh/tangent.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

FormalCharacter g_mod_b_weights(const RootSystem& rs) {
    FormalCharacter f;
    for (const Root& beta : rs.positive_roots())
        f.add(beta.weight, 1);
    return f;
}

FormalCharacter p_j_weights(const RootSystem& rs, const std::set<int>& j) {
    for (int i : j)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("subset index out of range");
    FormalCharacter f;
    f.add(rs.zero(), rs.rank());
    for (const Root& beta : rs.positive_roots()) {
        Weight neg(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
            neg[k] = -beta.weight[k];
        f.add(neg, 1);
        bool supported = true;
        for (int k = 0; k < rs.rank(); ++k)
            if (beta.root_coords[k] != 0 && !j.count(k))
                supported = false;
        if (supported)
            f.add(beta.weight, 1);
    }
    return f;
}

FormalCharacter adjoint_weights(const RootSystem& rs) {
    FormalCharacter f;
    f.add(rs.zero(), rs.rank());
    for (const Root& beta : rs.positive_roots()) {
        f.add(beta.weight, 1);
        Weight neg(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
            neg[k] = -beta.weight[k];
        f.add(neg, 1);
    }
    return f;
}

std::set<int> j_set(const RootSystem& rs, const ReducedWord& word) {
    if (!is_reduced(rs, word))
        throw std::invalid_argument("word is not reduced");
    std::set<int> out;
    for (size_t pos = 0; pos < word.letters.size(); ++pos) {
        int i = word.letters[pos];
        bool orthogonal = true;
        for (size_t k = 0; k < pos; ++k)
            if (rs.cartan(word.letters[k], i) != 0)
                orthogonal = false;
        if (orthogonal)
            out.insert(i);
    }
    return out;
}

std::set<int> schubert_stabilizer(const RootSystem& rs, const WeylElt& w) {
    return left_descents(rs, w);
}

namespace {

// Combines the line part L and base part Q of the tangent tower along the
// long exact sequence with connecting maps Q^j -> L^{j+1}.  Direct sum is
// certified when those pairs never share a weight.
GradedCharacter combine_tangent(const GradedCharacter& line, const GradedCharacter& base) {
    GradedCharacter out;
    for (const auto& [d, f] : line.degrees)
        out.add(d, f);
    for (const auto& [d, f] : base.degrees)
        out.add(d, f);
    out.trim();

    bool certified = line.exact && base.exact;
    int top = std::max(line.max_degree(), base.max_degree());
    for (int j = 0; j <= top && certified; ++j)
        for (const auto& [w, m] : base.at(j).terms())
            if (line.at(j + 1).mult(w) != 0)
                certified = false;

    if (certified)
        return out;

    // Lower estimate: start from the lower estimates of the parts and
    // cancel the connecting-map overlaps maximally.
    const auto& llow = line.exact ? line.degrees : line.lower;
    const auto& qlow = base.exact ? base.degrees : base.lower;
    GradedCharacter tmp;
    for (const auto& [d, f] : llow)
        tmp.add(d, f);
    for (const auto& [d, f] : qlow)
        tmp.add(d, f);
    std::map<int, FormalCharacter> lower_est = tmp.degrees;
    for (int j = 0; j <= top; ++j) {
        auto qd = qlow.find(j);
        auto ld = llow.find(j + 1);
        if (qd == qlow.end() || ld == llow.end())
            continue;
        for (const auto& [w, m] : qd->second.terms()) {
            long long other = ld->second.mult(w);
            if (m > 0 && other > 0) {
                long long cut = std::min(m, other);
                lower_est[j].add(w, -cut);
                lower_est[j + 1].add(w, -cut);
            }
        }
    }
    out.demote(std::move(lower_est));
    return out;
}

} // namespace

GradedCharacter bsdh_tangent(const RootSystem& rs, const ReducedWord& word, DecomposeMode mode) {
    if (!is_reduced(rs, word))
        throw std::invalid_argument("word is not reduced");
    if (word.empty())
        return GradedCharacter::zero(); // a point has no vector fields
    ReducedWord prefix{std::vector<int>(word.letters.begin(), word.letters.end() - 1)};
    int last = word.letters.back();
    GradedCharacter line = h_line_bundle(rs, word, rs.alpha(last), mode);
    GradedCharacter base = bsdh_tangent(rs, prefix, mode);
    return combine_tangent(line, base);
}

ParabolicBoundReport h0_parabolic_check(const RootSystem& rs, const ReducedWord& word,
                                        DecomposeMode mode) {
    if (!rs.simply_laced())
        throw std::domain_error("the parabolic bound on H^0 is asserted for simply-laced types only");
    ParabolicBoundReport rep;
    rep.j = j_set(rs, word);
    rep.h0 = bsdh_tangent(rs, word, mode).at(0);
    FormalCharacter pj = p_j_weights(rs, rep.j);
    for (const auto& [w, m] : rep.h0.terms()) {
        long long avail = pj.mult(w);
        if (m > avail)
            rep.excess.add(w, m - avail);
    }
    rep.pass = rep.excess.empty();
    return rep;
}

} // namespace liecoh
