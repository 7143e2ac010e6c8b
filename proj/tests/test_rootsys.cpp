#include "doctest.h"

#include <functional>

#include "liecoh/root_system.hpp"
#include "oracles.hpp"

using namespace liecoh;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4",
                           "B5", "B6", "B7", "B8", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
                           "D3", "D4", "D5", "D6", "D7", "D8", "E6", "E7", "E8", "F4", "G2"};

size_t expected_positive_count(const CartanType& t) {
    int n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

} // namespace

TEST_CASE("type parsing and admissibility") {
    CHECK(CartanType::parse("A1").rank == 1);
    CHECK(CartanType::parse("E8").simply_laced());
    CHECK(!CartanType::parse("B2").simply_laced());
    CHECK(CartanType::parse("D4").simply_laced());
    CHECK_THROWS_AS(CartanType::parse("B1"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("E5"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("F3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("G3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("A9"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse("H3"), std::invalid_argument);
    CHECK_THROWS_AS(CartanType::parse(""), std::invalid_argument);
}

TEST_CASE("A1 is forced") {
    RootSystem rs = RootSystem::build("A1");
    REQUIRE(rs.positive_roots().size() == 1);
    CHECK(rs.positive_roots()[0].weight == Weight{2});
    CHECK(rs.rho() == Weight{1});
}

TEST_CASE("B2 positive roots from reflection closure") {
    RootSystem rs = RootSystem::build("B2");
    // alpha_1 long, alpha_2 short: <alpha_1, alpha_2^vee> = -2.
    CHECK(rs.cartan(1, 0) == -2);
    CHECK(rs.cartan(0, 1) == -1);
    REQUIRE(rs.positive_roots().size() == 4);
    std::set<std::vector<int>> rc;
    for (const Root& r : rs.positive_roots())
        rc.insert(r.root_coords);
    CHECK(rc == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(rs.highest_root().root_coords == std::vector<int>{1, 2});
}

TEST_CASE("A2 highest root") {
    RootSystem rs = RootSystem::build("A2");
    CHECK(rs.highest_root().root_coords == std::vector<int>{1, 1});
}

TEST_CASE("closure count matches the brute-force orbit for small ranks") {
    for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
        RootSystem rs = RootSystem::build(t);
        auto orbit = oracles::root_orbit(rs);
        CHECK_MESSAGE(orbit.size() == 2 * rs.positive_roots().size(), t);
        for (const Root& r : rs.positive_roots())
            CHECK(orbit.count(r.weight) == 1);
    }
}

TEST_CASE("positive root counts across all supported types") {
    for (const char* t : kAllTypes) {
        RootSystem rs = RootSystem::build(t);
        CHECK_MESSAGE(rs.positive_roots().size() == expected_positive_count(rs.type()), t);
    }
}

TEST_CASE("every root pairs to 2 with its own coroot; 2 rho is the sum of positives") {
    for (const char* t : kAllTypes) {
        RootSystem rs = RootSystem::build(t);
        Weight sum(rs.rank(), 0);
        for (const Root& beta : rs.positive_roots()) {
            CHECK(rs.pairing(beta.weight, beta) == 2);
            for (int k = 0; k < rs.rank(); ++k)
                sum[k] += beta.weight[k];
        }
        Weight two_rho(rs.rank(), 2);
        CHECK_MESSAGE(sum == two_rho, t);
    }
}

TEST_CASE("reflecting a positive root by a simple reflection lands in the root set") {
    for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = RootSystem::build(t);
        for (const Root& beta : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) {
                auto [idx, sign] = rs.root_lookup(rs.reflect(beta.weight, i));
                CHECK(idx >= 0);
            }
    }
}

TEST_CASE("B2 pairings pinned by the short/long orientation") {
    RootSystem rs = RootSystem::build("B2");
    const Root& a1 = rs.simple_root(0);
    const Root& a2 = rs.simple_root(1);
    CHECK(rs.pairing(a1.weight, a2) == -2);
    CHECK(rs.pairing(a2.weight, a1) == -1);
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
    for (const char* t : kAllTypes) {
        RootSystem rs = RootSystem::build(t);
        for (int i = 0; i < rs.rank(); ++i)
            CHECK(rs.pairing(rs.rho(), i) == 1);
    }
}

TEST_CASE("singularity") {
    RootSystem b2 = RootSystem::build("B2");
    CHECK(b2.is_singular(b2.zero()));
    CHECK(!b2.is_singular(b2.rho()));
    CHECK(b2.is_singular(Weight{1, 0})); // omega_1 kills alpha_2^vee
}

TEST_CASE("index by greedy ascent") {
    for (const char* t : {"A2", "B2", "A3", "D4"}) {
        RootSystem rs = RootSystem::build(t);
        CHECK(rs.index(rs.rho()) == 0);
        Weight neg_rho(rs.rank(), -1);
        CHECK(rs.index(neg_rho) == static_cast<int>(rs.positive_roots().size()));
    }
    // simply-laced: minus a simple root, shifted, has index 1
    for (const char* t : {"A2", "A3", "D4"}) {
        RootSystem rs = RootSystem::build(t);
        for (int i = 0; i < rs.rank(); ++i) {
            Weight beta = rs.alpha(i);
            Weight shifted(rs.rank());
            for (int k = 0; k < rs.rank(); ++k)
                shifted[k] = -beta[k] + 1;
            CHECK(rs.index(shifted) == 1);
        }
    }
}

TEST_CASE("greedy ascent count is independent of the choice of negative coordinate") {
    for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
        RootSystem rs = RootSystem::build(t);
        // All choice sequences agree: DFS with memo on the weight.
        std::map<Weight, int> memo;
        std::function<int(const Weight&)> steps = [&](const Weight& w) -> int {
            auto it = memo.find(w);
            if (it != memo.end())
                return it->second;
            int result = -1;
            bool any = false;
            for (int k = 0; k < rs.rank(); ++k) {
                if (w[k] >= 0)
                    continue;
                any = true;
                int sub = steps(rs.reflect(w, k)) + 1;
                if (result == -1)
                    result = sub;
                else
                    CHECK(result == sub);
            }
            if (!any)
                result = 0;
            memo[w] = result;
            return result;
        };
        Weight w(rs.rank(), -3);
        for (;;) {
            CHECK(steps(w) == rs.index(w));
            int k = rs.rank() - 1;
            while (k >= 0 && w[k] == 3) {
                w[k] = -3;
                --k;
            }
            if (k < 0)
                break;
            ++w[k];
        }
    }
}

TEST_CASE("root-basis conversion round-trips") {
    RootSystem rs = RootSystem::build("B2");
    for (const Root& r : rs.positive_roots())
        CHECK(rs.from_root_coords(r.root_coords) == r.weight);
    CHECK(rs.from_root_coords({1, 0}) == rs.alpha(0));
}
