#include <doctest.h>

#include "netforge/constructions.hpp"
#include "netforge/optimum.hpp"
#include "oracles.hpp"

using namespace netforge;

TEST_CASE("social_optimum examples") {
    SUBCASE("alpha=3 on 3 nodes: the three 2-edge trees, cost 14") {
        auto r = social_optimum(CostVector({3, 3, 3}));
        CHECK(r.optimal_cost.value() == doctest::Approx(14.0));
        CHECK(r.graphs_searched == 8);
        REQUIRE(r.optimal_graphs.size() == 3);
        for (const auto& g : r.optimal_graphs) {
            CHECK(g.edge_count() == 2);
            CHECK(is_connected(g.graph()));
            CHECK(Cost::approx_equal(social_cost_owned(g, CostVector({3, 3, 3})),
                                     r.optimal_cost));
        }
    }
    SUBCASE("alpha=1 on 3 nodes: the triangle, cost 9") {
        auto r = social_optimum(CostVector({1, 1, 1}));
        CHECK(r.optimal_cost.value() == doctest::Approx(9.0));
        REQUIRE(r.optimal_graphs.size() == 1);
        CHECK(is_complete_graph(r.optimal_graphs[0].graph()));
    }
    SUBCASE("n=2: the single edge at the cheaper price") {
        auto r = social_optimum(CostVector({5, 1}));
        CHECK(r.optimal_cost.value() == doctest::Approx(3.0));
        REQUIRE(r.optimal_graphs.size() == 1);
        CHECK(r.optimal_graphs[0].owned_edges()[0].owner == 1);
    }
    SUBCASE("capacity error above cap") {
        CHECK_THROWS_AS(social_optimum(CostVector(std::vector<double>(8, 1.0))), CapacityError);
    }
}

TEST_CASE("search completeness: graphs_searched and connected-graph counts") {
    // connected labeled graph counts: n=3 -> 4, n=4 -> 38
    for (int n : {3, 4}) {
        int m_all = n * (n - 1) / 2;
        auto r = social_optimum(CostVector(std::vector<double>(n, 1.0)));
        CHECK(r.graphs_searched == (std::uint64_t{1} << m_all));
        int connected = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m_all); ++mask)
            if (is_connected(UndirectedGraph::from_edge_mask(n, mask))) ++connected;
        CHECK(connected == (n == 3 ? 4 : 38));
    }
}

TEST_CASE("ownership optimality: moving an edge to the pricier endpoint never helps") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto alphas = oracle::random_alphas(rng, n, 0.1, 4.0);
        CostVector costs(alphas);
        auto r = social_optimum(costs);
        for (const auto& g : r.optimal_graphs) {
            for (std::size_t k = 0; k < g.owned_edges().size(); ++k) {
                auto edges = g.owned_edges();
                std::swap(edges[k].owner, edges[k].other);
                Cost flipped = social_cost_owned(OwnedGraph(n, edges), costs);
                CHECK(!Cost::strictly_less(flipped, r.optimal_cost));
            }
        }
    }
}

TEST_CASE("bound tightness: star at the cheapest center attains the global bound") {
    std::mt19937_64 rng(59);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            auto alphas = oracle::random_alphas(rng, n, 2.0, 6.0);
            std::sort(alphas.begin(), alphas.end());
            CostVector costs(alphas);
            std::vector<OwnedEdge> edges;
            for (int i = 1; i < n; ++i) edges.push_back({0, i});
            Cost star = social_cost_owned(OwnedGraph(n, edges), costs);
            double bound = lower_bound_global(n, costs.min_alpha(), n - 1);
            CHECK(star.value() == doctest::Approx(bound));
            auto r = social_optimum(costs);
            CHECK(r.optimal_cost.value() == doctest::Approx(bound));
        }
    }
}

TEST_CASE("optimum matches a from-scratch exhaustive scan at n=4") {
    std::mt19937_64 rng(61);
    auto alphas = oracle::random_alphas(rng, 4, 0.1, 4.0);
    CostVector costs(alphas);
    double best = -1.0;
    for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
        UndirectedGraph g = UndirectedGraph::from_edge_mask(4, mask);
        if (!is_connected(g)) continue;
        std::vector<OwnedEdge> edges;
        for (auto [i, j] : g.edges())
            edges.push_back(alphas[j] < alphas[i] ? OwnedEdge{j, i} : OwnedEdge{i, j});
        double c = social_cost_owned(OwnedGraph(4, edges), costs).value();
        if (best < 0 || c < best) best = c;
    }
    CHECK(social_optimum(costs).optimal_cost.value() == doctest::Approx(best));
}

TEST_CASE("price_ratios") {
    SUBCASE("alpha=2 on 3 nodes: poa = pos = 1") {
        auto r = price_ratios(CostVector({2, 2, 2}));
        REQUIRE(r.poa.has_value());
        REQUIRE(r.pos.has_value());
        CHECK(*r.poa == doctest::Approx(1.0));
        CHECK(*r.pos == doctest::Approx(1.0));
        CHECK(r.worst_ne_cost.value() == doctest::Approx(12.0));
        CHECK(r.optimal_cost.value() == doctest::Approx(12.0));
    }
    SUBCASE("n=2 cheap: both equilibria cost 2.5") {
        auto r = price_ratios(CostVector({0.5, 0.5}));
        CHECK(r.equilibrium_count == 2);
        CHECK(*r.poa == doctest::Approx(1.0));
        CHECK(r.best_ne_cost.value() == doctest::Approx(2.5));
    }
    SUBCASE("n=1 degenerate 0/0 reported as 1.0") {
        auto r = price_ratios(CostVector({1.0}));
        CHECK(r.degenerate);
        CHECK(*r.poa == doctest::Approx(1.0));
        CHECK(*r.pos == doctest::Approx(1.0));
    }
    SUBCASE("pos <= poa and optimum dominance, random alphas") {
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 10; ++trial) {
            int n = 2 + static_cast<int>(rng() % 3);
            CostVector costs(oracle::random_alphas(rng, n, 0.1, 4.0));
            auto r = price_ratios(costs);
            if (r.poa && r.pos) {
                CHECK(*r.pos <= *r.poa + kCostEpsilon);
                CHECK(*r.pos >= 1.0 - kCostEpsilon);
            }
        }
    }
}

TEST_CASE("structural predicates") {
    CHECK(is_star_graph(UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(!is_star_graph(UndirectedGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_complete_graph(UndirectedGraph::from_edge_mask(4, (1u << 6) - 1)));
    CHECK(has_clique_star_shape(
        UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), 2));
    CHECK(!has_clique_star_shape(UndirectedGraph::from_edges(4, {{0, 1}, {2, 3}}), 2));
}

TEST_CASE("worker count never changes the optimum report") {
    CostVector costs({0.5, 1.5, 2.5, 3.5, 1.0});
    auto one = social_optimum(costs, 7, 1);
    auto four = social_optimum(costs, 7, 4);
    CHECK(one.optimal_cost == four.optimal_cost);
    CHECK(one.optimal_graphs == four.optimal_graphs);
    CHECK(one.graphs_searched == four.graphs_searched);
}
