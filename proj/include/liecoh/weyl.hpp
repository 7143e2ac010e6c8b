#pragma once

// Weyl group elements as integer matrices acting on weight coordinates.
// Identity of elements is matrix identity; every element carries a
// canonical reduced word (smallest-left-descent-first).

#include <optional>
#include <set>
#include <vector>

#include "liecoh/root_system.hpp"

namespace liecoh {

struct ReducedWord {
    std::vector<int> letters; // 0-based simple indices

    size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    auto operator<=>(const ReducedWord&) const = default;
};

class WeylElt {
  public:
    // rank x rank matrix, row-major; acts on column vectors of
    // fundamental-weight coordinates.
    static WeylElt identity(const RootSystem& rs);
    static WeylElt from_matrix(const RootSystem& rs, std::vector<int> mat);

    Weight apply(const Weight& lambda) const;
    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    const std::vector<int>& matrix() const { return mat_; }
    int rank() const { return rank_; }

    bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
    bool operator<(const WeylElt& o) const { return mat_ < o.mat_; }

  private:
    int rank_ = 0;
    std::vector<int> mat_;
    std::vector<int> word_;
    friend WeylElt compose(const RootSystem&, const WeylElt&, const WeylElt&);
};

WeylElt simple_reflection(const RootSystem& rs, int i);
WeylElt compose(const RootSystem& rs, const WeylElt& u, const WeylElt& v);
WeylElt inverse(const RootSystem& rs, const WeylElt& w);
WeylElt evaluate(const RootSystem& rs, const ReducedWord& word);
bool is_reduced(const RootSystem& rs, const ReducedWord& word);

// w . lambda = w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElt& w, const Weight& lambda);

// Number of positive roots sent to negative roots.
int matrix_length(const RootSystem& rs, const std::vector<int>& mat);

// { i : l(s_i w) < l(w) }.
std::set<int> left_descents(const RootSystem& rs, const WeylElt& w);
bool is_right_descent(const RootSystem& rs, const WeylElt& w, int i);

// Longest element of the parabolic subgroup W_J, by greedy ascent.
WeylElt longest_element(const RootSystem& rs, const std::set<int>& j);
WeylElt longest_element(const RootSystem& rs);
// Canonical reduced word of the longest element.
ReducedWord w0_word(const RootSystem& rs);

// Order of W_J from the classification of the induced subdiagram.
long long parabolic_order(const RootSystem& rs, const std::set<int>& j);

// All of W_J in BFS-by-length order.  Refuses when |W_J| exceeds the guard.
std::vector<WeylElt> enumerate(const RootSystem& rs, const std::set<int>& j,
                               long long guard = 1'000'000);
std::vector<WeylElt> enumerate(const RootSystem& rs, long long guard = 1'000'000);

// Exhaustive list of reduced words, by descent recursion.  Refuses when
// l(w) exceeds the cap.
std::vector<ReducedWord> all_reduced_words(const RootSystem& rs, const WeylElt& w, int cap = 12);

// Bruhat order via the lifting recursion along a reduced word of w.
bool bruhat_leq(const RootSystem& rs, const WeylElt& u, const WeylElt& w);

// Words serialize as comma-separated 1-based indices, e.g. "1,2,1".
std::string word_str(const ReducedWord& word);
ReducedWord word_parse(const std::string& s);

} // namespace liecoh
