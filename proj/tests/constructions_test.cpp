#include <doctest.h>

#include "netforge/constructions.hpp"
#include "oracles.hpp"

using namespace netforge;

TEST_CASE("complete_profile") {
    CHECK(complete_profile(2) == StrategyProfile::from_sets(2, {{1}, {}}));
    CHECK(complete_profile(3) == StrategyProfile::from_sets(3, {{1, 2}, {2}, {}}));
    UndirectedGraph g = induced_graph(complete_profile(4));
    CHECK(g.edge_count() == 6);
    DistanceMatrix d = all_pairs_distances(g);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(d.at(i, j).hops() == 1);
}

TEST_CASE("star_profile") {
    CHECK(star_profile(3, 0) == StrategyProfile::from_sets(3, {{}, {0}, {0}}));
    CHECK(star_profile(4, 2) == StrategyProfile::from_sets(4, {{2}, {2}, {}, {2}}));
    CHECK(star_profile(1, 0) == StrategyProfile(1));
    CHECK_THROWS_AS(star_profile(3, 3), InvalidInputError);
}

TEST_CASE("threshold_split") {
    CHECK(threshold_split(CostVector({0.5, 0.5, 3, 3}), 1.0) == 2);
    CHECK(threshold_split(CostVector({2, 3, 4}), 1.0) == 0);
    CHECK(threshold_split(CostVector({1, 1}), 1.0) == 2);
    CHECK_THROWS_AS(threshold_split(CostVector({2, 1}), 1.0), InvalidInputError);
}

TEST_CASE("clique_star_profile") {
    SUBCASE("mixed alphas, threshold 1") {
        CostVector a({0.5, 0.5, 3, 3});
        auto p = clique_star_profile(a, 1.0);
        CHECK(p == StrategyProfile::from_sets(4, {{1, 2, 3}, {2, 3}, {}, {}}));
        UndirectedGraph g = induced_graph(p);
        DistanceMatrix d = all_pairs_distances(g);
        CHECK(d.at(2, 3).hops() == 2); // peripherals meet only through the clique
        CHECK(has_clique_star_shape(g, 2));
    }
    SUBCASE("degenerate j=n is the complete profile") {
        CostVector a({0.5, 0.5, 0.5});
        CHECK(clique_star_profile(a, 1.0) == complete_profile(3));
    }
    SUBCASE("degenerate j=0 is the star at player 0") {
        CostVector a({2, 2, 2});
        CHECK(clique_star_profile(a, 1.0) == star_profile(3, 0));
    }
    SUBCASE("unsorted alphas rejected") {
        CHECK_THROWS_AS(clique_star_profile(CostVector({3, 0.5}), 1.0), InvalidInputError);
    }
    SUBCASE("single-attachment variant") {
        CostVector a({0.5, 0.5, 3, 3});
        auto p = clique_star_profile(a, 1.0, PeripheralAttachment::kSingleCliqueNode);
        CHECK(p == StrategyProfile::from_sets(4, {{1, 2, 3}, {}, {}, {}}));
        CHECK(is_connected(induced_graph(p)));
    }
    SUBCASE("no duplicate purchases, constructions connected") {
        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 50; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);
            auto alphas = oracle::random_alphas(rng, n, 0.0, 3.0);
            std::sort(alphas.begin(), alphas.end());
            CostVector costs(alphas);
            for (double t : {1.0, 2.0}) {
                auto p = clique_star_profile(costs, t);
                CHECK(is_connected(induced_graph(p)));
                int billed = 0;
                for (int i = 0; i < n; ++i) billed += p.purchase_count(i);
                CHECK(billed == induced_graph(p).edge_count());
            }
        }
    }
}

TEST_CASE("verify_claims") {
    SUBCASE("cheap alphas: NE-C1 applicable and holds") {
        auto verdicts = verify_claims(CostVector({0.5, 0.5, 0.5}));
        REQUIRE(verdicts.size() == 8);
        CHECK(verdicts[0].id == ClaimId::kNeC1);
        CHECK(verdicts[0].applicable);
        CHECK(verdicts[0].holds);
        // star claim not applicable here
        CHECK(verdicts[1].id == ClaimId::kNeC2);
        CHECK(!verdicts[1].applicable);
    }
    SUBCASE("expensive alphas: OPT-C1 holds with star minimizers") {
        auto verdicts = verify_claims(CostVector({3, 3, 3}));
        for (const auto& v : verdicts) {
            if (v.id == ClaimId::kOptC1) {
                CHECK(v.applicable);
                CHECK(v.holds);
            }
            if (v.id == ClaimId::kNeC2) {
                CHECK(v.applicable);
                CHECK(v.holds);
            }
            if (v.id == ClaimId::kOptC4) CHECK(!v.applicable);
        }
    }
    SUBCASE("cheap alphas: OPT-C4 unique complete minimizer") {
        auto verdicts = verify_claims(CostVector({1, 1, 1}));
        for (const auto& v : verdicts)
            if (v.id == ClaimId::kOptC4) {
                CHECK(v.applicable);
                CHECK(v.holds);
            }
    }
    SUBCASE("mixed alphas: NE-C3 gets a verdict; failures carry witnesses") {
        auto verdicts = verify_claims(CostVector({0.5, 3, 3}));
        for (const auto& v : verdicts)
            if (v.id == ClaimId::kNeC3) {
                CHECK(v.applicable);
                if (!v.holds) CHECK(v.deviation.has_value());
            }
    }
    SUBCASE("bound claims hold across a small grid") {
        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 5; ++trial) {
            int n = 2 + static_cast<int>(rng() % 3);
            auto alphas = oracle::random_alphas(rng, n, 0.0, 2.0);
            std::sort(alphas.begin(), alphas.end());
            for (const auto& v : verify_claims(CostVector(alphas)))
                if (v.id == ClaimId::kOptC2Bound || v.id == ClaimId::kOptC3Bound)
                    if (v.applicable) CHECK(v.holds);
        }
    }
    SUBCASE("unsorted alphas rejected") {
        CHECK_THROWS_AS(verify_claims(CostVector({2, 1})), InvalidInputError);
    }
}
