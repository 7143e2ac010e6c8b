#include "liecoh/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace liecoh {

std::string CartanType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void CartanType::validate(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B: ok = rank >= 2; break;
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank == 6 || rank == 7 || rank == 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (rank > 8)
        throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the supported cap of 8");
    if (!ok)
        throw std::invalid_argument("inadmissible Cartan type " + std::string(1, static_cast<char>(f)) +
                                    std::to_string(rank));
}

CartanType CartanType::parse(const std::string& s) {
    if (s.size() < 2)
        throw std::invalid_argument("cannot parse Cartan type '" + s + "'");
    char f = s[0];
    if (f < 'A' || f > 'G')
        throw std::invalid_argument("unknown family '" + std::string(1, f) + "' in Cartan type '" + s + "'");
    int rank = 0;
    try {
        size_t pos = 0;
        rank = std::stoi(s.substr(1), &pos);
        if (pos != s.size() - 1)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rank in Cartan type '" + s + "'");
    }
    auto fam = static_cast<Family>(f);
    validate(fam, rank);
    return CartanType{fam, rank};
}

int Root::height() const {
    return std::accumulate(root_coords.begin(), root_coords.end(), 0);
}

namespace {

// Dynkin diagram as edge list with marks: (i, j, cij, cji) meaning
// cartan[i][j] = cij and cartan[j][i] = cji.  Bourbaki numbering.
std::vector<std::vector<int>> make_cartan(CartanType t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        c[i][i] = 2;
    auto edge = [&](int i, int j, int cij = -1, int cji = -1) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i)
                edge(i, i + 1);
            break;
        case Family::B:
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
            for (int i = 0; i + 2 < n; ++i)
                edge(i, i + 1);
            edge(n - 2, n - 1, -1, -2);
            break;
        case Family::C:
            // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
            for (int i = 0; i + 2 < n; ++i)
                edge(i, i + 1);
            edge(n - 2, n - 1, -2, -1);
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i)
                edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i)
                edge(i, i + 1);
            break;
        case Family::F:
            edge(0, 1);
            edge(1, 2, -1, -2); // alpha_3 short
            edge(2, 3);
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3.
            edge(0, 1, -3, -1);
            break;
    }
    return c;
}

} // namespace

RootSystem RootSystem::build(CartanType type) {
    CartanType::validate(type.family, type.rank);
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = type.rank;
    rs.cartan_ = make_cartan(type);
    const int n = rs.rank_;

    // Reflection closure from the simple roots.  Reflecting beta by s_i
    // changes only coordinate i of the root basis (by -<beta, alpha_i^vee>)
    // and coordinate i of the coroot expansion (by -<alpha_i, beta^vee>).
    std::map<std::vector<int>, Root> seen;
    std::vector<std::vector<int>> work;
    for (int i = 0; i < n; ++i) {
        Root r;
        r.root_coords.assign(n, 0);
        r.root_coords[i] = 1;
        r.coroot_coords.assign(n, 0);
        r.coroot_coords[i] = 1;
        r.weight.assign(n, 0);
        for (int k = 0; k < n; ++k)
            r.weight[k] = rs.cartan_[k][i];
        r.positive = true;
        seen.emplace(r.root_coords, r);
        work.push_back(r.root_coords);
    }
    while (!work.empty()) {
        auto rc = work.back();
        work.pop_back();
        Root cur = seen.at(rc);
        for (int i = 0; i < n; ++i) {
            Root nxt = cur;
            int p = cur.weight[i]; // <beta, alpha_i^vee>
            nxt.root_coords[i] -= p;
            long long q = 0; // <alpha_i, beta^vee>
            for (int k = 0; k < n; ++k)
                q += static_cast<long long>(cur.coroot_coords[k]) * rs.cartan_[k][i];
            nxt.coroot_coords[i] -= static_cast<int>(q);
            for (int k = 0; k < n; ++k)
                nxt.weight[k] -= p * rs.cartan_[k][i];
            bool pos = std::all_of(nxt.root_coords.begin(), nxt.root_coords.end(), [](int v) { return v >= 0; });
            if (!pos)
                continue;
            nxt.positive = true;
            if (seen.emplace(nxt.root_coords, nxt).second)
                work.push_back(nxt.root_coords);
        }
    }

    for (auto& [rc, r] : seen)
        rs.positive_.push_back(r);
    std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
        int ha = a.height(), hb = b.height();
        if (ha != hb)
            return ha < hb;
        return a.root_coords < b.root_coords;
    });

    rs.simple_index_.assign(n, -1);
    for (int idx = 0; idx < static_cast<int>(rs.positive_.size()); ++idx) {
        const Root& r = rs.positive_[idx];
        rs.weight_to_positive_[r.weight] = idx;
        if (r.height() == 1) {
            for (int i = 0; i < n; ++i)
                if (r.root_coords[i] == 1)
                    rs.simple_index_[i] = idx;
        }
    }

    // The highest root is the unique maximal element in the root order.
    for (int idx = 0; idx < static_cast<int>(rs.positive_.size()); ++idx) {
        bool maximal = true;
        for (const Root& other : rs.positive_) {
            bool geq = true;
            for (int k = 0; k < n; ++k)
                if (other.root_coords[k] < rs.positive_[idx].root_coords[k])
                    geq = false;
            if (geq && other.root_coords != rs.positive_[idx].root_coords)
                maximal = false;
        }
        if (maximal) {
            if (rs.highest_index_ != -1)
                throw std::logic_error("root order has more than one maximal element");
            rs.highest_index_ = idx;
        }
    }

    rs.rho_.assign(n, 1);
    return rs;
}

long long RootSystem::pairing(const Weight& lambda, const Root& beta) const {
    check_weight(*this, lambda);
    long long s = 0;
    for (int k = 0; k < rank_; ++k)
        s += static_cast<long long>(beta.coroot_coords[k]) * lambda[k];
    return s;
}

Weight RootSystem::reflect(const Weight& lambda, int i) const {
    Weight out = lambda;
    int p = lambda[i];
    for (int k = 0; k < rank_; ++k)
        out[k] -= p * cartan_[k][i];
    return out;
}

bool RootSystem::dominant(const Weight& lambda) const {
    return std::all_of(lambda.begin(), lambda.end(), [](int v) { return v >= 0; });
}

bool RootSystem::is_singular(const Weight& lambda) const {
    for (const Root& beta : positive_)
        if (pairing(lambda, beta) == 0)
            return true;
    return false;
}

int RootSystem::index(const Weight& lambda) const {
    check_weight(*this, lambda);
    Weight cur = lambda;
    int steps = 0;
    for (;;) {
        int i = -1;
        for (int k = 0; k < rank_; ++k)
            if (cur[k] < 0) {
                i = k;
                break;
            }
        if (i < 0)
            return steps;
        cur = reflect(cur, i);
        ++steps;
    }
}

std::pair<int, int> RootSystem::root_lookup(const Weight& w) const {
    auto it = weight_to_positive_.find(w);
    if (it != weight_to_positive_.end())
        return {it->second, +1};
    Weight neg(w.size());
    for (size_t k = 0; k < w.size(); ++k)
        neg[k] = -w[k];
    it = weight_to_positive_.find(neg);
    if (it != weight_to_positive_.end())
        return {it->second, -1};
    return {-1, 0};
}

Weight RootSystem::from_root_coords(const std::vector<int>& rc) const {
    if (static_cast<int>(rc.size()) != rank_)
        throw std::invalid_argument("root-basis vector has wrong length");
    Weight w(rank_, 0);
    for (int k = 0; k < rank_; ++k)
        for (int j = 0; j < rank_; ++j)
            w[k] += cartan_[k][j] * rc[j];
    return w;
}

std::string RootSystem::weight_str(const Weight& w) const {
    std::ostringstream os;
    os << '[';
    for (int k = 0; k < rank_; ++k)
        os << (k ? "," : "") << w[k];
    os << ']';
    return os.str();
}

void check_weight(const RootSystem& rs, const Weight& w) {
    if (static_cast<int>(w.size()) != rs.rank())
        throw std::invalid_argument("weight has length " + std::to_string(w.size()) + ", expected rank " +
                                    std::to_string(rs.rank()));
}

} // namespace liecoh
