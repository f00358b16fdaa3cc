#pragma once

#include <string>
#include <vector>

#include "qnetopt/core_model.hpp"
#include "qnetopt/tree_builder.hpp"

namespace qnetopt::testing {

/// Compact builder for hand-written test networks. Nodes get ids in
/// insertion order; links default to a single all-links mode unless
/// modes are declared explicitly.
class NetworkBuilder {
public:
    NetworkBuilder& node(const std::string& label, double storage_cost = 0.0);
    NetworkBuilder& switcher(const std::string& label, double storage_cost = 0.0);

    struct LinkSpec {
        int level = 1;
        double fidelity = 1.0;
        double throughput = 1.0;
        double utility = 1.0;
    };
    NetworkBuilder& link(const std::string& from, const std::string& to, LinkSpec spec);
    NetworkBuilder& link(const std::string& from, const std::string& to) {
        return link(from, to, LinkSpec{});
    }

    /// Declares a mode; pairs are (from, to) labels.
    NetworkBuilder& mode(int mode_id,
                         const std::vector<std::pair<std::string, std::string>>& pairs);

    /// Restricts the last declared link to the given modes.
    NetworkBuilder& in_modes(const std::vector<int>& mode_ids);

    QuantumNetwork build() const;
    NodeId id(const std::string& label) const;

private:
    struct PendingLink {
        std::string from, to;
        LinkSpec spec;
        std::vector<int> modes; // empty = every declared mode
    };
    std::vector<Node> nodes_;
    std::vector<NodeId> switchers_;
    std::vector<PendingLink> links_;
    std::vector<int> mode_ids_;
    std::vector<std::vector<std::pair<std::string, std::string>>> mode_pairs_;
};

struct Fixture {
    std::string name;
    QuantumNetwork network;
    NodeSets sets; // initial = {source}, destinations with primary first
};

/// A -> B -> C with unit fidelities and throughputs 2, 3.
Fixture line3();
/// The seven-node example topology with switcher modes S1 and S2.
Fixture fig1();
/// Two disjoint routes whose objective triples are incomparable.
Fixture diamond_asym();

/// The whole desk-scale suite (>= 20 entries, every candidate graph
/// within the enumeration budget).
std::vector<Fixture> fixture_suite();

} // namespace qnetopt::testing
