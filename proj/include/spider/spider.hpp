// spider.hpp - construction of spider graphs Sp(M, K, L) and their serialization.
//
// A spider has a complete core of M nodes; every core node carries K legs,
// each a chain of L nodes. Node ids are assigned deterministically:
//
//   core node c                      -> c                      (0 <= c < M)
//   leg node (core c, leg k, pos p)  -> M + c*K*L + k*L + p-1  (1 <= p <= L)
//
// Position 1 is adjacent to its core node; position L is the leg's terminal node.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spider/checked.hpp"
#include "spider/graph.hpp"

namespace spider {

struct SpiderParams {
    Count m = 1;  ///< core size
    Count k = 0;  ///< legs per core node
    Count l = 0;  ///< leg length

    friend bool operator==(const SpiderParams&, const SpiderParams&) = default;
    friend auto operator<=>(const SpiderParams&, const SpiderParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const SpiderParams& p);

/// Validates and normalizes: K = 0 or L = 0 both mean "no legs", stored as (M, 0, 0).
/// Throws InputError if M < 1 or K, L are negative.
[[nodiscard]] SpiderParams normalize(Count m, Count k, Count l);

[[nodiscard]] Count node_count(const SpiderParams& p);   ///< M + MKL
[[nodiscard]] Count edge_count(const SpiderParams& p);   ///< M(M-1)/2 + MKL
/// N(N-1)/2, cross-checked against its expansion in M, K, L.
[[nodiscard]] Count pair_count(const SpiderParams& p);

enum class Role { Core, Leg };

struct NodeLabel {
    Role role = Role::Core;
    Count core = 0;
    Count leg = 0;       ///< leg index within the bundle, legs only
    Count position = 0;  ///< 1..L along the leg, legs only

    friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

[[nodiscard]] NodeLabel label_of(const SpiderParams& p, Count id);
[[nodiscard]] Count id_of(const SpiderParams& p, const NodeLabel& label);

[[nodiscard]] Graph build_spider(const SpiderParams& p);

/// Role annotation used by the DOT writer.
enum class NodeRole { Core, Leg, Terminal };

[[nodiscard]] std::string_view to_string(NodeRole r);

/// Leg ends are terminals. When the whole spider is a single chain hanging off
/// a lone core node (M = 1, K = 1) the core is the chain's other end and is
/// also reported as a terminal.
[[nodiscard]] std::vector<NodeRole> node_roles(const SpiderParams& p);

enum class GraphFormat { EdgeList, Dot, AdjacencyCsv };

/// Accepts "edge-list", "dot", "adjacency-csv". Throws InputError otherwise.
[[nodiscard]] GraphFormat parse_graph_format(std::string_view name);

/// Deterministic serialization; edges are emitted in lexicographic order.
/// DOT output requires one role per node (InputError otherwise).
void export_graph(const Graph& g, std::span<const NodeRole> roles, GraphFormat format,
                  std::ostream& os);

}  // namespace spider
