#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "netforge/errors.hpp"

namespace netforge {

using PlayerId = int;

// Adjacency and purchase sets are stored as bitmasks; every enumeration cap
// in the engine sits far below this.
inline constexpr int kMaxPlayers = 26;

// Hop distance with an explicit unreachable sentinel. Addition saturates:
// unreachable + anything stays unreachable.
class Distance {
public:
    constexpr Distance() : hops_(-1) {}

    static constexpr Distance unreachable() { return Distance(); }
    static Distance of(int hops) {
        if (hops < 0) throw InvalidInputError("Distance::of: negative hop count");
        Distance d;
        d.hops_ = hops;
        return d;
    }

    constexpr bool reachable() const { return hops_ >= 0; }
    int hops() const {
        if (!reachable()) throw InvalidInputError("Distance::hops on unreachable");
        return hops_;
    }

    constexpr Distance operator+(Distance other) const {
        Distance d;
        if (reachable() && other.reachable()) d.hops_ = hops_ + other.hops_;
        return d;
    }

    constexpr bool operator==(const Distance&) const = default;

private:
    int hops_;
};

// Each player's purchased-edge set. Purchases are per-player masks; a bit j
// in player i's mask means i pays for the link {i,j}. Mutual purchases are
// legal (both get billed; the induced graph deduplicates).
class StrategyProfile {
public:
    explicit StrategyProfile(int n);
    static StrategyProfile from_sets(int n, const std::vector<std::vector<PlayerId>>& sets);

    int player_count() const { return n_; }

    std::uint32_t purchase_mask(PlayerId i) const { return masks_[check_player(i)]; }
    void set_purchase_mask(PlayerId i, std::uint32_t mask);
    void add_purchase(PlayerId buyer, PlayerId target);

    int purchase_count(PlayerId i) const {
        return std::popcount(masks_[check_player(i)]);
    }
    std::vector<PlayerId> purchases(PlayerId i) const;
    std::vector<std::vector<PlayerId>> to_sets() const;

    bool operator==(const StrategyProfile&) const = default;

private:
    int check_player(PlayerId i) const;

    int n_;
    std::vector<std::uint32_t> masks_;
};

// Lexicographic order on profiles: player by player, each purchase set
// compared as its sorted index list.
bool profile_lex_less(const StrategyProfile& a, const StrategyProfile& b);

// Lexicographic order of two index sets given as bitmasks.
bool mask_lex_less(std::uint32_t a, std::uint32_t b);

// Simple undirected graph, immutable once built.
class UndirectedGraph {
public:
    static UndirectedGraph from_edges(int n, const std::vector<std::pair<PlayerId, PlayerId>>& edges);
    // Bit k of `edge_mask` selects the k-th pair in the (0,1),(0,2),...,(1,2),...
    // ordering of all n(n-1)/2 unordered pairs.
    static UndirectedGraph from_edge_mask(int n, std::uint64_t edge_mask);
    static UndirectedGraph empty(int n);

    int node_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(PlayerId i, PlayerId j) const;
    std::uint32_t neighbors_mask(PlayerId i) const { return adj_[i]; }
    const std::vector<std::uint32_t>& adjacency() const { return adj_; }
    std::vector<std::pair<PlayerId, PlayerId>> edges() const;

    int degree(PlayerId i) const { return std::popcount(adj_[i]); }

    bool operator==(const UndirectedGraph&) const = default;

private:
    explicit UndirectedGraph(int n);

    int n_;
    int edge_count_;
    std::vector<std::uint32_t> adj_;
};

class DistanceMatrix {
public:
    DistanceMatrix(int n, std::vector<Distance> flat);

    int node_count() const { return n_; }
    Distance at(PlayerId i, PlayerId j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Distance> d_;
};

UndirectedGraph induced_graph(const StrategyProfile& profile);
DistanceMatrix all_pairs_distances(const UndirectedGraph& graph);
bool is_connected(const UndirectedGraph& graph);

// BFS from `src` over adjacency masks. Returns {sum of hop distances to the
// reached nodes, count of reached nodes including src}. Hot path for every
// cost evaluation in the engine.
std::pair<std::int64_t, int> distance_sum_from(const std::uint32_t* adj, int n, PlayerId src);

} // namespace netforge
