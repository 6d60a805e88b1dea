#include "spider/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace spider {

namespace {

// Histogram of distances over unordered pairs; index j holds the count at distance j.
std::vector<Count> distance_histogram(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<Count> hist(n == 0 ? 1 : n, 0);
    std::vector<std::uint32_t> dist(n);
    for (NodeId s = 0; s < n; ++s) {
        bfs_distances(g, s, dist);
        for (std::size_t t = s + 1; t < n; ++t) {
            if (dist[t] == DistanceMatrix::kUnreachable) {
                throw DomainError("graph is disconnected: node " + std::to_string(t) +
                                  " unreachable from node " + std::to_string(s));
            }
            ++hist[dist[t]];
        }
    }
    return hist;
}

void sort_descending(std::vector<Count>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

bool Graph::adjacent(NodeId u, NodeId v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (NodeId u = 0; u < adj_.size(); ++u) {
        for (NodeId v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph build_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
    if (n > std::numeric_limits<NodeId>::max()) throw ArithmeticError("node count exceeds NodeId range");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") references a node outside [0," + std::to_string(n) + ")");
        }
        if (u == v) throw InputError("self-loop at node " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    Count total = 0;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        total += static_cast<Count>(nb.size());
    }
    g.edges_ = total / 2;
    return g;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1) return true;
    std::vector<std::uint32_t> dist(n);
    bfs_distances(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::uint32_t d) { return d == DistanceMatrix::kUnreachable; });
}

void bfs_distances(const Graph& g, NodeId source, std::span<std::uint32_t> out) {
    std::fill(out.begin(), out.end(), DistanceMatrix::kUnreachable);
    std::queue<NodeId> frontier;
    out[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.neighbors(u)) {
            if (out[v] == DistanceMatrix::kUnreachable) {
                out[v] = out[u] + 1;
                frontier.push(v);
            }
        }
    }
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix d(g.node_count());
    for (NodeId s = 0; s < g.node_count(); ++s) bfs_distances(g, s, d.row(s));
    return d;
}

std::vector<Count> degree_array(const Graph& g) {
    std::vector<Count> out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) out[v] = g.degree(v);
    sort_descending(out);
    return out;
}

std::vector<Count> node_gamma_values(const Graph& g) {
    std::vector<Count> out(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        Count s = g.degree(v);
        for (NodeId w : g.neighbors(v)) s = checked_add(s, g.degree(w));
        out[v] = s;
    }
    return out;
}

std::vector<Count> gamma_array(const Graph& g) {
    auto out = node_gamma_values(g);
    sort_descending(out);
    return out;
}

Count neighboring_index(const Graph& g) {
    Count s = 0;
    for (Count x : node_gamma_values(g)) s = checked_add(s, x);
    return s;
}

std::vector<Count> alpha_array(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1) return {};
    auto hist = distance_histogram(g);
    return {hist.begin() + 1, hist.end()};
}

Count diameter(const Graph& g) {
    const auto alpha = alpha_array(g);
    for (std::size_t j = alpha.size(); j > 0; --j) {
        if (alpha[j - 1] > 0) return static_cast<Count>(j);
    }
    return 0;
}

Rational density(const Graph& g) {
    const auto n = static_cast<Count>(g.node_count());
    if (n <= 1) throw DomainError("density is undefined for fewer than two nodes");
    return {checked_mul(2, g.edge_count()), checked_mul(n, n - 1)};
}

Count h_index(std::span<const Count> values) {
    if (!std::is_sorted(values.begin(), values.end(), std::greater<>())) {
        throw InputError("h_index expects a non-increasing array");
    }
    if (!values.empty() && values.back() < 0) throw InputError("h_index expects non-negative values");
    Count h = 0;
    while (h < static_cast<Count>(values.size()) && values[h] >= h + 1) ++h;
    return h;
}

Count total_distance(const Graph& g) {
    Count s = 0;
    const auto alpha = alpha_array(g);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        s = checked_add(s, checked_mul(static_cast<Count>(j + 1), alpha[j]));
    }
    return s;
}

Rational mean_distance(const Graph& g) {
    const auto n = static_cast<Count>(g.node_count());
    if (n < 2) throw DomainError("mean distance is undefined for fewer than two nodes");
    return {total_distance(g), checked_mul(n, n - 1) / 2};
}

IndicatorArrays compute_indicators(const Graph& g) {
    const auto n = static_cast<Count>(g.node_count());
    if (n < 2) throw DomainError("indicators require at least two nodes");
    IndicatorArrays r;
    r.delta = degree_array(g);
    r.gamma = gamma_array(g);
    r.alpha = alpha_array(g);
    r.density = density(g);
    r.h_index = h_index(r.delta);
    for (Count x : r.gamma) r.neighboring_index = checked_add(r.neighboring_index, x);
    for (std::size_t j = 0; j < r.alpha.size(); ++j) {
        if (r.alpha[j] > 0) r.diameter = static_cast<Count>(j + 1);
        r.total_distance =
            checked_add(r.total_distance, checked_mul(static_cast<Count>(j + 1), r.alpha[j]));
    }
    r.mean_distance = Rational(r.total_distance, checked_mul(n, n - 1) / 2);
    return r;
}

}  // namespace spider
