#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qnetopt {

using NodeId = int;

struct Node {
    NodeId id = 0;
    std::string label;
    double storage_cost = 0.0; // per-node quantum storage cost zeta
};

/// A leveled entangled link between two nodes. Level l spans hop
/// distance 2^(l-1) over the underlying repeater chain.
struct EntangledLink {
    NodeId source = 0;
    NodeId target = 0;
    int level = 1;
    double fidelity = 1.0;
    double throughput = 1.0;            // B_F, entangled states per second at fidelity F
    double storage_cost_at_target = 0.0; // zeta_J, copied from the target node
    double utility = 0.0;               // lambda, entanglement utility coefficient
    double existence_probability = 1.0; // carried as metadata only
};

/// One switcher mode: the set of links that are live while the
/// switcher holds this configuration.
struct SwitcherMode {
    int mode_id = 0;
    std::vector<std::pair<NodeId, NodeId>> active_links;
};

/// The quantum repeater network N = (V, S). Immutable after
/// construction; the constructor validates invariants, recomputes
/// f_max and copies per-node storage costs onto the links.
class QuantumNetwork {
public:
    QuantumNetwork() = default;
    QuantumNetwork(std::vector<Node> nodes,
                   std::vector<NodeId> switcher_ids,
                   std::vector<EntangledLink> links,
                   std::vector<SwitcherMode> modes);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<NodeId>& switcher_ids() const { return switcher_ids_; }
    const std::vector<EntangledLink>& links() const { return links_; }
    const std::vector<SwitcherMode>& modes() const { return modes_; }
    double f_max() const { return f_max_; }

    bool has_node(NodeId id) const;
    const Node& node(NodeId id) const;
    const Node* find_node_by_label(const std::string& label) const;

    /// Index of the link (source, target), or npos. At most one link
    /// per ordered node pair exists.
    std::size_t find_link(NodeId source, NodeId target) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    void validate();

    std::vector<Node> nodes_;
    std::vector<NodeId> switcher_ids_;
    std::vector<EntangledLink> links_;
    std::vector<SwitcherMode> modes_;
    double f_max_ = 1.0;
};

/// One directed edge of the memory utilization graph: abstract
/// transmitter tx feeds abstract receiver rx while mode mode_id is
/// active. Link-derived quantities are cached here so the graph is
/// self-contained for tree construction.
struct GmEdge {
    NodeId tx = 0;
    NodeId rx = 0;
    int mode_id = 0;
    std::size_t link_index = 0; // into QuantumNetwork::links()
    int level = 1;
    double fidelity = 1.0;
    double throughput = 1.0;
    double omega = 0.0;          // cost Omega(tx, rx)
    double initial_utility = 0.0;
};

/// The quantum memory utilization graph G_m: a bipartite directed
/// abstraction with one transmitter and one receiver copy of each
/// network node, combining all switcher modes.
struct MemoryUtilizationGraph {
    std::vector<NodeId> tx_nodes; // sorted node ids
    std::vector<NodeId> rx_nodes;
    std::vector<GmEdge> edges;    // canonical order: (mode_id, tx, rx)

    /// Indices into edges of all edges leaving tx node `from`.
    std::vector<std::size_t> out_edges(NodeId from) const;
};

/// Hop distance 2^(l-1) of a level-l entangled link.
std::int64_t hop_distance(int level);

/// Link cost 1 / B_F.
double link_cost(const EntangledLink& link);

/// Edge cost Omega = 1 / (link_cost + zeta_J).
double edge_cost(const EntangledLink& link);

MemoryUtilizationGraph build_memory_utilization_graph(const QuantumNetwork& network);

} // namespace qnetopt
