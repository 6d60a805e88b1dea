// graph.hpp - undirected simple graphs and brute-force network indicators.
//
// Every indicator here is computed directly from the adjacency structure by
// breadth-first search. These routines are the reference against which the
// spider closed forms are checked, so they know nothing about spiders.
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "spider/checked.hpp"

namespace spider {

using NodeId = std::uint32_t;

/// Undirected simple graph with sorted, duplicate-free neighbor lists.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] std::size_t node_count() const { return adj_.size(); }
    [[nodiscard]] Count edge_count() const { return edges_; }
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const { return adj_[v]; }
    [[nodiscard]] Count degree(NodeId v) const { return static_cast<Count>(adj_[v].size()); }
    [[nodiscard]] bool adjacent(NodeId u, NodeId v) const;

    /// Edges as (u, v) with u < v, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

    friend Graph build_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

private:
    std::vector<std::vector<NodeId>> adj_;
    Count edges_ = 0;
};

/// Builds a graph on nodes [0, n). Repeated edges collapse to one.
/// Throws InputError on out-of-range ids or self-loops.
Graph build_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

[[nodiscard]] bool is_connected(const Graph& g);

/// Dense n x n geodesic distance table.
class DistanceMatrix {
public:
    static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

    explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    [[nodiscard]] std::span<std::uint32_t> row(std::size_t i) { return {d_.data() + i * n_, n_}; }
    [[nodiscard]] std::span<const std::uint32_t> row(std::size_t i) const {
        return {d_.data() + i * n_, n_};
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> d_;
};

/// BFS from `source`; unreachable nodes keep DistanceMatrix::kUnreachable.
void bfs_distances(const Graph& g, NodeId source, std::span<std::uint32_t> out);

[[nodiscard]] DistanceMatrix all_pairs_distances(const Graph& g);

/// Node degrees sorted non-increasing.
[[nodiscard]] std::vector<Count> degree_array(const Graph& g);

/// Per-node gamma value deg(i) + sum of neighbor degrees, in node-id order (unsorted).
[[nodiscard]] std::vector<Count> node_gamma_values(const Graph& g);

/// Gamma values sorted non-increasing.
[[nodiscard]] std::vector<Count> gamma_array(const Graph& g);

/// Sum of all gamma values.
[[nodiscard]] Count neighboring_index(const Graph& g);

/// Entry j-1 counts unordered pairs at distance j, for j = 1..n-1.
/// Empty for n <= 1. Throws DomainError if the graph is disconnected.
[[nodiscard]] std::vector<Count> alpha_array(const Graph& g);

/// Largest geodesic distance; 0 for a single node. Throws DomainError if disconnected.
[[nodiscard]] Count diameter(const Graph& g);

/// 2|E| / (n(n-1)). Throws DomainError for n <= 1.
[[nodiscard]] Rational density(const Graph& g);

/// Largest h with values[h-1] >= h. Input must be non-increasing and non-negative.
[[nodiscard]] Count h_index(std::span<const Count> values);

/// Sum of d(A, B) over unordered pairs. Throws DomainError if disconnected.
[[nodiscard]] Count total_distance(const Graph& g);

/// Mean geodesic distance over unordered pairs (equal to the ordered-pair mean).
/// Throws DomainError for n < 2 or a disconnected graph.
[[nodiscard]] Rational mean_distance(const Graph& g);

/// Everything above in one pass over the BFS trees.
struct IndicatorArrays {
    std::vector<Count> delta;
    std::vector<Count> gamma;
    std::vector<Count> alpha;
    Rational density;
    Count diameter = 0;
    Count h_index = 0;
    Count neighboring_index = 0;
    Count total_distance = 0;
    Rational mean_distance;
};

/// Requires a connected graph with at least two nodes.
[[nodiscard]] IndicatorArrays compute_indicators(const Graph& g);

}  // namespace spider
