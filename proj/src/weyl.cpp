#include "liecoh/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace liecoh {

namespace {

std::vector<int> identity_matrix(int n) {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = 1;
    return m;
}

std::vector<int> reflection_matrix(const RootSystem& rs, int i) {
    const int n = rs.rank();
    auto m = identity_matrix(n);
    // s_i = I - (column i of the Cartan matrix) e_i^T
    for (int k = 0; k < n; ++k)
        m[k * n + i] -= rs.cartan(k, i);
    return m;
}

std::vector<int> mat_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0)
                continue;
            for (int j = 0; j < n; ++j)
                c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

Weight mat_apply(int n, const std::vector<int>& m, const Weight& v) {
    Weight out(n, 0);
    for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j)
            s += static_cast<long long>(m[i * n + j]) * v[j];
        out[i] = static_cast<int>(s);
    }
    return out;
}

// Canonical reduced word: repeatedly strip the smallest left descent.
std::vector<int> canonical_word(const RootSystem& rs, std::vector<int> mat) {
    const int n = rs.rank();
    std::vector<int> word;
    int len = matrix_length(rs, mat);
    while (len > 0) {
        int chosen = -1;
        for (int i = 0; i < n && chosen < 0; ++i) {
            auto cand = mat_mul(n, reflection_matrix(rs, i), mat);
            if (matrix_length(rs, cand) < len) {
                chosen = i;
                mat = std::move(cand);
            }
        }
        if (chosen < 0)
            throw std::logic_error("no descent found for a non-identity element");
        word.push_back(chosen);
        --len;
    }
    return word;
}

} // namespace

int matrix_length(const RootSystem& rs, const std::vector<int>& mat) {
    int count = 0;
    for (const Root& beta : rs.positive_roots()) {
        Weight img = mat_apply(rs.rank(), mat, beta.weight);
        auto [idx, sign] = rs.root_lookup(img);
        if (idx < 0)
            throw std::logic_error("matrix does not permute the roots");
        if (sign < 0)
            ++count;
    }
    return count;
}

WeylElt WeylElt::identity(const RootSystem& rs) {
    WeylElt w;
    w.rank_ = rs.rank();
    w.mat_ = identity_matrix(rs.rank());
    return w;
}

WeylElt WeylElt::from_matrix(const RootSystem& rs, std::vector<int> mat) {
    WeylElt w;
    w.rank_ = rs.rank();
    w.word_ = canonical_word(rs, mat);
    w.mat_ = std::move(mat);
    return w;
}

Weight WeylElt::apply(const Weight& lambda) const {
    return mat_apply(rank_, mat_, lambda);
}

WeylElt simple_reflection(const RootSystem& rs, int i) {
    if (i < 0 || i >= rs.rank())
        throw std::invalid_argument("simple-root index " + std::to_string(i + 1) + " out of range for " +
                                    rs.type().str());
    return WeylElt::from_matrix(rs, reflection_matrix(rs, i));
}

WeylElt compose(const RootSystem& rs, const WeylElt& u, const WeylElt& v) {
    return WeylElt::from_matrix(rs, mat_mul(rs.rank(), u.matrix(), v.matrix()));
}

WeylElt inverse(const RootSystem& rs, const WeylElt& w) {
    WeylElt out = WeylElt::identity(rs);
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it)
        out = compose(rs, out, simple_reflection(rs, *it));
    return out;
}

WeylElt evaluate(const RootSystem& rs, const ReducedWord& word) {
    WeylElt out = WeylElt::identity(rs);
    for (int i : word.letters)
        out = compose(rs, out, simple_reflection(rs, i));
    return out;
}

bool is_reduced(const RootSystem& rs, const ReducedWord& word) {
    for (int i : word.letters)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("word letter " + std::to_string(i + 1) + " out of range for " +
                                        rs.type().str());
    return evaluate(rs, word).length() == static_cast<int>(word.size());
}

Weight dot_action(const RootSystem& rs, const WeylElt& w, const Weight& lambda) {
    check_weight(rs, lambda);
    Weight shifted = lambda;
    for (int k = 0; k < rs.rank(); ++k)
        shifted[k] += 1;
    Weight out = w.apply(shifted);
    for (int k = 0; k < rs.rank(); ++k)
        out[k] -= 1;
    return out;
}

std::set<int> left_descents(const RootSystem& rs, const WeylElt& w) {
    std::set<int> out;
    WeylElt winv = inverse(rs, w);
    for (int i = 0; i < rs.rank(); ++i) {
        auto [idx, sign] = rs.root_lookup(winv.apply(rs.alpha(i)));
        if (idx < 0)
            throw std::logic_error("image of a simple root is not a root");
        if (sign < 0)
            out.insert(i);
    }
    return out;
}

bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i) {
    auto [idx, sign] = rs.root_lookup(w.apply(rs.alpha(i)));
    if (idx < 0)
        throw std::logic_error("image of a simple root is not a root");
    return sign < 0;
}

WeylElt longest_element(const RootSystem& rs, const std::set<int>& j) {
    for (int i : j)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("subset index out of range");
    WeylElt w = WeylElt::identity(rs);
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int i : j) {
            if (!is_right_descent(rs, w, i)) {
                w = compose(rs, w, simple_reflection(rs, i));
                progressed = true;
                break;
            }
        }
    }
    return w;
}

WeylElt longest_element(const RootSystem& rs) {
    std::set<int> all;
    for (int i = 0; i < rs.rank(); ++i)
        all.insert(i);
    return longest_element(rs, all);
}

ReducedWord w0_word(const RootSystem& rs) {
    return ReducedWord{longest_element(rs).word()};
}

namespace {

// Classifies a connected subdiagram and returns the order of its Weyl group.
long long component_order(const RootSystem& rs, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    auto factorial = [](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i)
            f *= i;
        return f;
    };
    int doubles = 0, triples = 0;
    std::vector<int> degree(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int cab = rs.cartan(nodes[a], nodes[b]);
            int cba = rs.cartan(nodes[b], nodes[a]);
            if (cab == 0)
                continue;
            ++degree[a];
            ++degree[b];
            int m = cab * cba;
            if (m == 2)
                ++doubles;
            else if (m == 3)
                ++triples;
        }
    if (triples > 0)
        return 12; // G2
    bool branched = std::any_of(degree.begin(), degree.end(), [](int d) { return d >= 3; });
    if (doubles > 0) {
        if (n == 4 && !branched) {
            // F4 iff the double edge is interior
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    int m = rs.cartan(nodes[a], nodes[b]) * rs.cartan(nodes[b], nodes[a]);
                    if (m == 2 && degree[a] == 2 && degree[b] == 2)
                        return 1152;
                }
        }
        return (1LL << n) * factorial(n); // B or C
    }
    if (branched) {
        // Arm lengths from the branch node decide D vs E.
        int branch = -1;
        for (int a = 0; a < n; ++a)
            if (degree[a] >= 3)
                branch = a;
        std::vector<int> arms;
        for (int a = 0; a < n; ++a)
            if (degree[a] == 1) {
                // walk from leaf a to the branch node
                int len = 0, prev = -1, cur = a;
                while (cur != branch) {
                    int nxt = -1;
                    for (int b = 0; b < n; ++b)
                        if (b != prev && b != cur && rs.cartan(nodes[cur], nodes[b]) != 0)
                            nxt = b;
                    prev = cur;
                    cur = nxt;
                    ++len;
                }
                arms.push_back(len);
            }
        std::sort(arms.begin(), arms.end());
        if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1)
            return (1LL << (n - 1)) * factorial(n); // D
        if (arms == std::vector<int>{1, 2, 2})
            return 51840; // E6
        if (arms == std::vector<int>{1, 2, 3})
            return 2903040; // E7
        if (arms == std::vector<int>{1, 2, 4})
            return 696729600; // E8
        throw std::logic_error("unrecognized branched subdiagram");
    }
    return factorial(n + 1); // A
}

} // namespace

long long parabolic_order(const RootSystem& rs, const std::set<int>& j) {
    for (int i : j)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("subset index out of range");
    std::vector<int> nodes(j.begin(), j.end());
    std::vector<bool> used(nodes.size(), false);
    long long order = 1;
    for (size_t s = 0; s < nodes.size(); ++s) {
        if (used[s])
            continue;
        std::vector<int> comp;
        std::deque<size_t> q{s};
        used[s] = true;
        while (!q.empty()) {
            size_t a = q.front();
            q.pop_front();
            comp.push_back(nodes[a]);
            for (size_t b = 0; b < nodes.size(); ++b)
                if (!used[b] && rs.cartan(nodes[a], nodes[b]) != 0) {
                    used[b] = true;
                    q.push_back(b);
                }
        }
        order *= component_order(rs, comp);
    }
    return order;
}

std::vector<WeylElt> enumerate(const RootSystem& rs, const std::set<int>& j, long long guard) {
    long long bound = parabolic_order(rs, j);
    if (bound > guard)
        throw std::domain_error("parabolic subgroup has order " + std::to_string(bound) +
                                ", which exceeds the enumeration guard of " + std::to_string(guard));
    std::vector<WeylElt> out;
    std::map<std::vector<int>, bool> seen;
    std::deque<WeylElt> frontier{WeylElt::identity(rs)};
    seen[frontier.front().matrix()] = true;
    while (!frontier.empty()) {
        WeylElt w = frontier.front();
        frontier.pop_front();
        out.push_back(w);
        for (int i : j) {
            if (is_right_descent(rs, w, i))
                continue;
            WeylElt nxt = compose(rs, w, simple_reflection(rs, i));
            if (seen.emplace(nxt.matrix(), true).second)
                frontier.push_back(nxt);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const WeylElt& a, const WeylElt& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.word() < b.word();
    });
    return out;
}

std::vector<WeylElt> enumerate(const RootSystem& rs, long long guard) {
    std::set<int> all;
    for (int i = 0; i < rs.rank(); ++i)
        all.insert(i);
    return enumerate(rs, all, guard);
}

std::vector<ReducedWord> all_reduced_words(const RootSystem& rs, const WeylElt& w, int cap) {
    if (w.length() > cap)
        throw std::domain_error("element has length " + std::to_string(w.length()) +
                                ", which exceeds the reduced-word cap of " + std::to_string(cap));
    if (w.length() == 0)
        return {ReducedWord{}};
    std::vector<ReducedWord> out;
    for (int i : left_descents(rs, w)) {
        WeylElt rest = compose(rs, simple_reflection(rs, i), w);
        for (const ReducedWord& tail : all_reduced_words(rs, rest, cap)) {
            ReducedWord word;
            word.letters.reserve(tail.size() + 1);
            word.letters.push_back(i);
            word.letters.insert(word.letters.end(), tail.letters.begin(), tail.letters.end());
            out.push_back(std::move(word));
        }
    }
    return out;
}

std::string word_str(const ReducedWord& word) {
    std::ostringstream os;
    for (size_t k = 0; k < word.letters.size(); ++k)
        os << (k ? "," : "") << word.letters[k] + 1;
    return os.str();
}

ReducedWord word_parse(const std::string& s) {
    ReducedWord out;
    if (s.empty())
        return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int v = 0;
        try {
            size_t pos = 0;
            v = std::stoi(tok, &pos);
            if (pos != tok.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse word letter '" + tok + "'");
        }
        if (v < 1)
            throw std::invalid_argument("word letters are 1-based simple-root indices");
        out.letters.push_back(v - 1);
    }
    return out;
}

bool bruhat_leq(const RootSystem& rs, const WeylElt& u, const WeylElt& w) {
    // Lifting along the canonical reduced word of w: with i the first
    // letter, u <= w iff (s_i u <= s_i w when s_i u < u) else (u <= s_i w).
    WeylElt uu = u, ww = w;
    while (ww.length() > 0) {
        if (uu.length() == 0)
            return true;
        if (uu.length() > ww.length())
            return false;
        int i = ww.word().front();
        ww = compose(rs, simple_reflection(rs, i), ww);
        WeylElt su = compose(rs, simple_reflection(rs, i), uu);
        if (su.length() < uu.length())
            uu = su;
    }
    return uu.length() == 0;
}

} // namespace liecoh
