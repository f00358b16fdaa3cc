#include "qnetopt/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qnetopt {

QuantumNetwork::QuantumNetwork(std::vector<Node> nodes,
                               std::vector<NodeId> switcher_ids,
                               std::vector<EntangledLink> links,
                               std::vector<SwitcherMode> modes)
    : nodes_(std::move(nodes)),
      switcher_ids_(std::move(switcher_ids)),
      links_(std::move(links)),
      modes_(std::move(modes)) {
    validate();
}

void QuantumNetwork::validate() {
    std::unordered_set<NodeId> ids;
    std::unordered_set<std::string> labels;
    for (const Node& n : nodes_) {
        if (!ids.insert(n.id).second)
            throw std::invalid_argument("duplicate node id " + std::to_string(n.id));
        if (!labels.insert(n.label).second)
            throw std::invalid_argument("duplicate node label '" + n.label + "'");
        if (n.storage_cost < 0.0)
            throw std::invalid_argument("negative storage cost at node " + n.label);
    }
    for (NodeId s : switcher_ids_)
        if (!ids.count(s))
            throw std::invalid_argument("switcher id " + std::to_string(s) + " is not a node");

    std::unordered_set<std::uint64_t> pairs;
    f_max_ = 0.0;
    for (EntangledLink& l : links_) {
        if (!ids.count(l.source) || !ids.count(l.target))
            throw std::invalid_argument("link endpoint is not a node");
        if (l.level < 1)
            throw std::invalid_argument("link level must be >= 1");
        if (l.fidelity <= 0.0 || l.fidelity > 1.0)
            throw std::invalid_argument("link fidelity must be in (0, 1]");
        if (l.throughput <= 0.0)
            throw std::invalid_argument("link throughput must be positive");
        if (l.utility < 0.0)
            throw std::invalid_argument("link utility must be non-negative");
        if (l.existence_probability < 0.0 || l.existence_probability > 1.0)
            throw std::invalid_argument("existence probability must be in [0, 1]");
        const std::uint64_t key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.source)) << 32) |
            static_cast<std::uint32_t>(l.target);
        if (!pairs.insert(key).second)
            throw std::invalid_argument("duplicate link between the same node pair");
        l.storage_cost_at_target = node(l.target).storage_cost;
        f_max_ = std::max(f_max_, l.fidelity);
    }
    if (links_.empty()) f_max_ = 1.0;

    if (modes_.empty()) {
        // A mode-less network gets one default mode containing all links.
        SwitcherMode all;
        all.mode_id = 0;
        for (const EntangledLink& l : links_) all.active_links.emplace_back(l.source, l.target);
        modes_.push_back(std::move(all));
    }
    std::unordered_set<int> mode_ids;
    for (const SwitcherMode& m : modes_) {
        if (!mode_ids.insert(m.mode_id).second)
            throw std::invalid_argument("duplicate mode id " + std::to_string(m.mode_id));
        for (const auto& [a, b] : m.active_links)
            if (!ids.count(a) || !ids.count(b))
                throw std::invalid_argument("mode references unknown node");
    }
}

bool QuantumNetwork::has_node(NodeId id) const {
    return std::any_of(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.id == id; });
}

const Node& QuantumNetwork::node(NodeId id) const {
    for (const Node& n : nodes_)
        if (n.id == id) return n;
    throw std::out_of_range("no node with id " + std::to_string(id));
}

const Node* QuantumNetwork::find_node_by_label(const std::string& label) const {
    for (const Node& n : nodes_)
        if (n.label == label) return &n;
    return nullptr;
}

std::size_t QuantumNetwork::find_link(NodeId source, NodeId target) const {
    for (std::size_t i = 0; i < links_.size(); ++i)
        if (links_[i].source == source && links_[i].target == target) return i;
    return npos;
}

std::vector<std::size_t> MemoryUtilizationGraph::out_edges(NodeId from) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].tx == from) out.push_back(i);
    return out;
}

std::int64_t hop_distance(int level) {
    if (level < 1) throw std::invalid_argument("entangled link level must be >= 1");
    if (level > 62) throw std::invalid_argument("entangled link level too large");
    return std::int64_t{1} << (level - 1);
}

double link_cost(const EntangledLink& link) {
    if (link.throughput <= 0.0)
        throw std::invalid_argument("link throughput must be positive");
    return 1.0 / link.throughput;
}

double edge_cost(const EntangledLink& link) {
    return 1.0 / (link_cost(link) + link.storage_cost_at_target);
}

MemoryUtilizationGraph build_memory_utilization_graph(const QuantumNetwork& network) {
    MemoryUtilizationGraph g;
    for (const Node& n : network.nodes()) {
        g.tx_nodes.push_back(n.id);
        g.rx_nodes.push_back(n.id);
    }
    std::sort(g.tx_nodes.begin(), g.tx_nodes.end());
    std::sort(g.rx_nodes.begin(), g.rx_nodes.end());

    for (const SwitcherMode& mode : network.modes()) {
        for (const auto& [src, dst] : mode.active_links) {
            const std::size_t li = network.find_link(src, dst);
            if (li == QuantumNetwork::npos) continue; // pair without a link contributes nothing
            const EntangledLink& link = network.links()[li];
            GmEdge e;
            e.tx = src;
            e.rx = dst;
            e.mode_id = mode.mode_id;
            e.link_index = li;
            e.level = link.level;
            e.fidelity = link.fidelity;
            e.throughput = link.throughput;
            e.omega = edge_cost(link);
            e.initial_utility = link.utility;
            g.edges.push_back(e);
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const GmEdge& a, const GmEdge& b) {
        if (a.mode_id != b.mode_id) return a.mode_id < b.mode_id;
        if (a.tx != b.tx) return a.tx < b.tx;
        return a.rx < b.rx;
    });
    // Duplicate (tx, rx, mode) tuples cannot occur: the network holds at
    // most one link per ordered pair and mode pairs are deduplicated here.
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end(),
                              [](const GmEdge& a, const GmEdge& b) {
                                  return a.mode_id == b.mode_id && a.tx == b.tx && a.rx == b.rx;
                              }),
                  g.edges.end());
    return g;
}

} // namespace qnetopt
