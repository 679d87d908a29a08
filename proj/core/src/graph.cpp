#include "netforge/graph.hpp"

#include <algorithm>
#include <string>

namespace netforge {

namespace {

void check_n(int n) {
    if (n < 0 || n > kMaxPlayers)
        throw InvalidInputError("player count out of range: " + std::to_string(n));
}

} // namespace

StrategyProfile::StrategyProfile(int n) : n_(n), masks_(static_cast<std::size_t>(n), 0u) {
    check_n(n);
}

StrategyProfile StrategyProfile::from_sets(int n, const std::vector<std::vector<PlayerId>>& sets) {
    if (static_cast<int>(sets.size()) != n)
        throw InvalidInputError("profile has " + std::to_string(sets.size()) +
                                " purchase sets for n=" + std::to_string(n));
    StrategyProfile p(n);
    for (int i = 0; i < n; ++i)
        for (PlayerId j : sets[i]) p.add_purchase(i, j);
    return p;
}

int StrategyProfile::check_player(PlayerId i) const {
    if (i < 0 || i >= n_)
        throw InvalidInputError("player index out of range: " + std::to_string(i));
    return i;
}

void StrategyProfile::set_purchase_mask(PlayerId i, std::uint32_t mask) {
    check_player(i);
    if (mask & (1u << i))
        throw InvalidInputError("self-link in purchase set of player " + std::to_string(i));
    if (n_ < 32 && (mask >> n_) != 0)
        throw InvalidInputError("purchase set of player " + std::to_string(i) +
                                " references a player >= n");
    masks_[i] = mask;
}

void StrategyProfile::add_purchase(PlayerId buyer, PlayerId target) {
    check_player(buyer);
    check_player(target);
    if (buyer == target)
        throw InvalidInputError("self-link: player " + std::to_string(buyer));
    masks_[buyer] |= 1u << target;
}

std::vector<PlayerId> StrategyProfile::purchases(PlayerId i) const {
    std::uint32_t m = masks_[check_player(i)];
    std::vector<PlayerId> out;
    out.reserve(std::popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::vector<std::vector<PlayerId>> StrategyProfile::to_sets() const {
    std::vector<std::vector<PlayerId>> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) out.push_back(purchases(i));
    return out;
}

bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int x = std::countr_zero(a);
        int y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0; // a is a strict prefix of b
}

bool profile_lex_less(const StrategyProfile& a, const StrategyProfile& b) {
    int n = std::min(a.player_count(), b.player_count());
    for (int i = 0; i < n; ++i) {
        std::uint32_t ma = a.purchase_mask(i);
        std::uint32_t mb = b.purchase_mask(i);
        if (ma != mb) return mask_lex_less(ma, mb);
    }
    return a.player_count() < b.player_count();
}

UndirectedGraph::UndirectedGraph(int n)
    : n_(n), edge_count_(0), adj_(static_cast<std::size_t>(n), 0u) {
    check_n(n);
}

UndirectedGraph UndirectedGraph::empty(int n) { return UndirectedGraph(n); }

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<std::pair<PlayerId, PlayerId>>& edges) {
    UndirectedGraph g(n);
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw InvalidInputError("edge endpoint out of range");
        if (i == j) throw InvalidInputError("self-loop edge");
        if (!(g.adj_[i] & (1u << j))) {
            g.adj_[i] |= 1u << j;
            g.adj_[j] |= 1u << i;
            ++g.edge_count_;
        }
    }
    return g;
}

UndirectedGraph UndirectedGraph::from_edge_mask(int n, std::uint64_t edge_mask) {
    UndirectedGraph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (edge_mask & (std::uint64_t{1} << k)) {
                g.adj_[i] |= 1u << j;
                g.adj_[j] |= 1u << i;
                ++g.edge_count_;
            }
        }
    }
    if (k < 64 && (edge_mask >> k) != 0)
        throw InvalidInputError("edge mask has bits beyond n(n-1)/2");
    return g;
}

bool UndirectedGraph::has_edge(PlayerId i, PlayerId j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
    return (adj_[i] >> j) & 1u;
}

std::vector<std::pair<PlayerId, PlayerId>> UndirectedGraph::edges() const {
    std::vector<std::pair<PlayerId, PlayerId>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((adj_[i] >> j) & 1u) out.emplace_back(i, j);
    return out;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<Distance> flat)
    : n_(n), d_(std::move(flat)) {
    if (d_.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInputError("distance matrix size mismatch");
}

UndirectedGraph induced_graph(const StrategyProfile& profile) {
    int n = profile.player_count();
    std::vector<std::pair<PlayerId, PlayerId>> edges;
    for (int i = 0; i < n; ++i) {
        std::uint32_t m = profile.purchase_mask(i);
        while (m) {
            int j = std::countr_zero(m);
            m &= m - 1;
            edges.emplace_back(i, j);
        }
    }
    return UndirectedGraph::from_edges(n, edges);
}

std::pair<std::int64_t, int> distance_sum_from(const std::uint32_t* adj, int n, PlayerId src) {
    std::uint32_t visited = 1u << src;
    std::uint32_t frontier = visited;
    std::int64_t sum = 0;
    int reached = 1;
    int depth = 0;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v];
        }
        next &= ~visited;
        if (!next) break;
        ++depth;
        int c = std::popcount(next);
        sum += static_cast<std::int64_t>(depth) * c;
        reached += c;
        visited |= next;
        frontier = next;
    }
    (void)n;
    return {sum, reached};
}

DistanceMatrix all_pairs_distances(const UndirectedGraph& graph) {
    int n = graph.node_count();
    std::vector<Distance> flat(static_cast<std::size_t>(n) * n, Distance::unreachable());
    const std::uint32_t* adj = graph.adjacency().data();
    for (int s = 0; s < n; ++s) {
        std::uint32_t visited = 1u << s;
        std::uint32_t frontier = visited;
        int depth = 0;
        flat[static_cast<std::size_t>(s) * n + s] = Distance::of(0);
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v];
            }
            next &= ~visited;
            if (!next) break;
            ++depth;
            std::uint32_t g = next;
            while (g) {
                int v = std::countr_zero(g);
                g &= g - 1;
                flat[static_cast<std::size_t>(s) * n + v] = Distance::of(depth);
            }
            visited |= next;
            frontier = next;
        }
    }
    return DistanceMatrix(n, std::move(flat));
}

bool is_connected(const UndirectedGraph& graph) {
    int n = graph.node_count();
    if (n <= 1) return true;
    auto [sum, reached] = distance_sum_from(graph.adjacency().data(), n, 0);
    (void)sum;
    return reached == n;
}

} // namespace netforge
