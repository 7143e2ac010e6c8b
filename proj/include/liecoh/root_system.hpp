#pragma once

// Finite root system data: Cartan matrices, roots, weights, pairings.
//
// Weights live in the fundamental-weight basis throughout: a weight is an
// integer vector c with c[i] = <lambda, alpha_i^vee>.  Roots additionally
// carry their coordinates in the simple-root basis and the expansion of
// their coroot in simple coroots, so arbitrary pairings are dot products.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace liecoh {

using Weight = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
    Family family;
    int rank;

    bool simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }
    std::string str() const;

    // Parses "A2", "B2", "E8", ...  Throws std::invalid_argument on
    // inadmissible combinations (A n>=1, B n>=2, C n>=2, D n>=3,
    // E n in {6,7,8}, F n=4, G n=2; rank capped at 8).
    static CartanType parse(const std::string& s);
    static void validate(Family f, int rank);
};

struct Root {
    Weight weight;                  // fundamental-weight coordinates
    std::vector<int> root_coords;   // simple-root basis
    std::vector<int> coroot_coords; // coroot in simple-coroot basis
    bool positive;

    int height() const;
};

class RootSystem {
  public:
    static RootSystem build(CartanType type);
    static RootSystem build(const std::string& type) { return build(CartanType::parse(type)); }

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    bool simply_laced() const { return type_.simply_laced(); }

    // cartan(i, j) = <alpha_j, alpha_i^vee>; column j is alpha_j in
    // fundamental-weight coordinates.
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& simple_root(int i) const { return positive_[simple_index_[i]]; }
    const Root& highest_root() const { return positive_[highest_index_]; }
    const Weight& rho() const { return rho_; }
    Weight zero() const { return Weight(rank_, 0); }

    Weight alpha(int i) const { return simple_root(i).weight; }

    // <lambda, alpha_i^vee>: a coordinate lookup.
    int pairing(const Weight& lambda, int i) const { return lambda.at(i); }
    // <lambda, beta^vee> for any root of the system.
    long long pairing(const Weight& lambda, const Root& beta) const;

    // s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
    Weight reflect(const Weight& lambda, int i) const;

    bool dominant(const Weight& lambda) const;
    // True iff some positive root pairs to zero with lambda.
    bool is_singular(const Weight& lambda) const;
    // min{ l(w) : w(lambda) dominant }, computed by greedy ascent.
    int index(const Weight& lambda) const;

    // Looks up a weight as a root: returns (index into positive_roots, sign)
    // or (-1, 0) if the weight is not a root.
    std::pair<int, int> root_lookup(const Weight& w) const;

    // Converts simple-root-basis coordinates to weight coordinates.
    Weight from_root_coords(const std::vector<int>& rc) const;

    std::string weight_str(const Weight& w) const;

  private:
    CartanType type_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Root> positive_;
    std::vector<int> simple_index_;
    int highest_index_ = -1;
    Weight rho_;
    std::map<Weight, int> weight_to_positive_;
};

void check_weight(const RootSystem& rs, const Weight& w);

} // namespace liecoh
