#include "qnetopt/generator.hpp"

#include <stdexcept>
#include <string>

#include "qnetopt/rng.hpp"

namespace qnetopt {

QuantumNetwork generate_network(const GeneratorOptions& options, std::uint64_t seed) {
    if (options.nodes < 2) throw std::invalid_argument("a network needs at least 2 nodes");
    if (options.switchers < 0 || options.switchers >= options.nodes)
        throw std::invalid_argument("switcher count must lie in [0, nodes)");
    if (options.max_level < 1) throw std::invalid_argument("max level must be >= 1");
    if (options.fidelity_min <= 0.0 || options.fidelity_max > 1.0 ||
        options.fidelity_min > options.fidelity_max)
        throw std::invalid_argument("fidelity range must satisfy 0 < min <= max <= 1");

    Rng rng(seed);
    std::vector<Node> nodes;
    const int repeaters = options.nodes - options.switchers;
    for (int i = 0; i < options.nodes; ++i) {
        Node n;
        n.id = i;
        n.label = i < repeaters ? "R" + std::to_string(i + 1)
                                : "S" + std::to_string(i - repeaters + 1);
        n.storage_cost = rng.uniform(0.0, options.storage_cost_max);
        nodes.push_back(std::move(n));
    }
    std::vector<NodeId> switchers;
    for (int i = repeaters; i < options.nodes; ++i) switchers.push_back(i);

    std::vector<EntangledLink> links;
    for (int level = 1; level <= options.max_level; ++level) {
        const auto d = hop_distance(level);
        for (int x = 0; x + d < options.nodes; ++x) {
            if (level > 1 && rng.uniform01() >= options.higher_level_probability) continue;
            EntangledLink l;
            l.source = x;
            l.target = x + static_cast<int>(d);
            l.level = level;
            l.fidelity = rng.uniform(options.fidelity_min, options.fidelity_max);
            l.throughput = rng.uniform(options.throughput_min, options.throughput_max);
            l.utility = 1.0;
            l.existence_probability = 1.0;
            links.push_back(l);
        }
    }

    std::vector<SwitcherMode> modes;
    const int mode_count = options.switchers == 0 ? 1 : 2 * options.switchers;
    std::vector<std::vector<int>> assignment(links.size());
    for (std::size_t li = 0; li < links.size(); ++li) {
        if (links[li].level == 1) {
            for (int m = 0; m < mode_count; ++m) assignment[li].push_back(m);
            continue;
        }
        for (int m = 0; m < mode_count; ++m)
            if (rng.uniform01() < options.mode_activation_probability)
                assignment[li].push_back(m);
        if (assignment[li].empty())
            assignment[li].push_back(static_cast<int>(li) % mode_count);
    }
    for (int m = 0; m < mode_count; ++m) {
        SwitcherMode mode;
        mode.mode_id = m;
        for (std::size_t li = 0; li < links.size(); ++li)
            for (int am : assignment[li])
                if (am == m) mode.active_links.emplace_back(links[li].source, links[li].target);
        modes.push_back(std::move(mode));
    }

    return QuantumNetwork(std::move(nodes), std::move(switchers), std::move(links),
                          std::move(modes));
}

} // namespace qnetopt
