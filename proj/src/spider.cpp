#include "spider/spider.hpp"

#include <ostream>

namespace spider {

std::ostream& operator<<(std::ostream& os, const SpiderParams& p) {
    return os << "(" << p.m << "," << p.k << "," << p.l << ")";
}

SpiderParams normalize(Count m, Count k, Count l) {
    if (m < 1) throw InputError("core size M must be at least 1, got " + std::to_string(m));
    if (k < 0) throw InputError("leg count K must be non-negative, got " + std::to_string(k));
    if (l < 0) throw InputError("leg length L must be non-negative, got " + std::to_string(l));
    if (k == 0 || l == 0) return {m, 0, 0};
    return {m, k, l};
}

Count node_count(const SpiderParams& p) {
    return checked_add(p.m, checked_product(p.m, p.k, p.l));
}

Count edge_count(const SpiderParams& p) {
    return checked_add(checked_mul(p.m, p.m - 1) / 2, checked_product(p.m, p.k, p.l));
}

Count pair_count(const SpiderParams& p) {
    const Count n = node_count(p);
    const Count direct = checked_mul(n, n - 1) / 2;
    // 2 * pairs = M(M-1) - MKL + 2 M^2 KL + M^2 K^2 L^2
    const Count mkl = checked_product(p.m, p.k, p.l);
    Count twice = checked_mul(p.m, p.m - 1);
    twice = checked_sub(twice, mkl);
    twice = checked_add(twice, checked_product(2, p.m, mkl));
    twice = checked_add(twice, checked_mul(mkl, mkl));
    if (exact_div(twice, 2) != direct) {
        throw FormulaError("pair count expansion disagrees with N(N-1)/2");
    }
    return direct;
}

NodeLabel label_of(const SpiderParams& p, Count id) {
    const Count n = node_count(p);
    if (id < 0 || id >= n) throw InputError("node id " + std::to_string(id) + " out of range");
    if (id < p.m) return {Role::Core, id, 0, 0};
    const Count off = id - p.m;
    const Count per_core = p.k * p.l;
    return {Role::Leg, off / per_core, (off % per_core) / p.l, off % p.l + 1};
}

Count id_of(const SpiderParams& p, const NodeLabel& label) {
    if (label.core < 0 || label.core >= p.m) throw InputError("core index out of range");
    if (label.role == Role::Core) return label.core;
    if (label.leg < 0 || label.leg >= p.k || label.position < 1 || label.position > p.l) {
        throw InputError("leg label out of range");
    }
    return p.m + label.core * p.k * p.l + label.leg * p.l + (label.position - 1);
}

Graph build_spider(const SpiderParams& p) {
    const Count n = node_count(p);
    const Count e = edge_count(p);
    if (n > static_cast<Count>(std::numeric_limits<NodeId>::max())) {
        throw ArithmeticError("spider too large for 32-bit node ids");
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(e));
    for (Count a = 0; a < p.m; ++a) {
        for (Count b = a + 1; b < p.m; ++b) edges.emplace_back(a, b);
    }
    for (Count c = 0; c < p.m; ++c) {
        for (Count leg = 0; leg < p.k; ++leg) {
            Count prev = c;
            for (Count pos = 1; pos <= p.l; ++pos) {
                const Count id = id_of(p, {Role::Leg, c, leg, pos});
                edges.emplace_back(static_cast<NodeId>(prev), static_cast<NodeId>(id));
                prev = id;
            }
        }
    }
    return build_graph(static_cast<std::size_t>(n), edges);
}

std::string_view to_string(NodeRole r) {
    switch (r) {
        case NodeRole::Core: return "core";
        case NodeRole::Leg: return "leg";
        case NodeRole::Terminal: return "terminal";
    }
    return "?";
}

std::vector<NodeRole> node_roles(const SpiderParams& p) {
    const Count n = node_count(p);
    std::vector<NodeRole> roles(static_cast<std::size_t>(n), NodeRole::Leg);
    for (Count c = 0; c < p.m; ++c) roles[c] = NodeRole::Core;
    if (p.m == 1 && p.k == 1) roles[0] = NodeRole::Terminal;
    for (Count id = p.m; id < n; ++id) {
        if (label_of(p, id).position == p.l) roles[id] = NodeRole::Terminal;
    }
    return roles;
}

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edge-list") return GraphFormat::EdgeList;
    if (name == "dot") return GraphFormat::Dot;
    if (name == "adjacency-csv") return GraphFormat::AdjacencyCsv;
    throw InputError("unknown graph format '" + std::string(name) +
                     "' (expected edge-list, dot or adjacency-csv)");
}

void export_graph(const Graph& g, std::span<const NodeRole> roles, GraphFormat format,
                  std::ostream& os) {
    const std::size_t n = g.node_count();
    switch (format) {
        case GraphFormat::EdgeList:
            for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
            break;
        case GraphFormat::Dot:
            if (roles.size() != n) throw InputError("DOT export needs one role per node");
            os << "graph spider {\n";
            for (NodeId v = 0; v < n; ++v) os << "  " << v << " [role=\"" << to_string(roles[v]) << "\"];\n";
            for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
            os << "}\n";
            break;
        case GraphFormat::AdjacencyCsv:
            for (NodeId u = 0; u < n; ++u) {
                for (NodeId v = 0; v < n; ++v) {
                    if (v > 0) os << ',';
                    os << (g.adjacent(u, v) ? '1' : '0');
                }
                os << '\n';
            }
            break;
    }
}

}  // namespace spider
