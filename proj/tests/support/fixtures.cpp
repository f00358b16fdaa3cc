#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnetopt::testing {

NetworkBuilder& NetworkBuilder::node(const std::string& label, double storage_cost) {
    nodes_.push_back({static_cast<NodeId>(nodes_.size()), label, storage_cost});
    return *this;
}

NetworkBuilder& NetworkBuilder::switcher(const std::string& label, double storage_cost) {
    node(label, storage_cost);
    switchers_.push_back(nodes_.back().id);
    return *this;
}

NetworkBuilder& NetworkBuilder::link(const std::string& from, const std::string& to,
                                     LinkSpec spec) {
    links_.push_back({from, to, spec, {}});
    return *this;
}

NetworkBuilder& NetworkBuilder::mode(
    int mode_id, const std::vector<std::pair<std::string, std::string>>& pairs) {
    mode_ids_.push_back(mode_id);
    mode_pairs_.push_back(pairs);
    return *this;
}

NetworkBuilder& NetworkBuilder::in_modes(const std::vector<int>& mode_ids) {
    if (links_.empty()) throw std::logic_error("in_modes() needs a preceding link()");
    links_.back().modes = mode_ids;
    return *this;
}

NodeId NetworkBuilder::id(const std::string& label) const {
    for (const Node& n : nodes_)
        if (n.label == label) return n.id;
    throw std::out_of_range("no fixture node labelled '" + label + "'");
}

QuantumNetwork NetworkBuilder::build() const {
    std::vector<EntangledLink> links;
    for (const PendingLink& p : links_) {
        EntangledLink l;
        l.source = id(p.from);
        l.target = id(p.to);
        l.level = p.spec.level;
        l.fidelity = p.spec.fidelity;
        l.throughput = p.spec.throughput;
        l.utility = p.spec.utility;
        links.push_back(l);
    }

    std::vector<SwitcherMode> modes;
    if (mode_ids_.empty()) {
        if (std::any_of(links_.begin(), links_.end(),
                        [](const PendingLink& p) { return !p.modes.empty(); })) {
            // Links restricted to modes without explicit mode declarations:
            // collect the ids they mention.
            std::vector<int> ids;
            for (const PendingLink& p : links_)
                for (int m : p.modes)
                    if (std::find(ids.begin(), ids.end(), m) == ids.end()) ids.push_back(m);
            std::sort(ids.begin(), ids.end());
            for (int m : ids) {
                SwitcherMode mode;
                mode.mode_id = m;
                for (const PendingLink& p : links_) {
                    const bool active = p.modes.empty() ||
                                        std::find(p.modes.begin(), p.modes.end(), m) !=
                                            p.modes.end();
                    if (active) mode.active_links.emplace_back(id(p.from), id(p.to));
                }
                modes.push_back(std::move(mode));
            }
        }
        // Otherwise leave modes empty: the network supplies the default mode.
    } else {
        for (std::size_t i = 0; i < mode_ids_.size(); ++i) {
            SwitcherMode mode;
            mode.mode_id = mode_ids_[i];
            for (const auto& [from, to] : mode_pairs_[i])
                mode.active_links.emplace_back(id(from), id(to));
            modes.push_back(std::move(mode));
        }
    }
    return QuantumNetwork(nodes_, switchers_, std::move(links), std::move(modes));
}

namespace {

Fixture make(const std::string& name, const NetworkBuilder& b, const std::string& source,
             const std::vector<std::string>& destinations) {
    Fixture f;
    f.name = name;
    f.network = b.build();
    f.sets.initial = {b.id(source)};
    for (const std::string& d : destinations) f.sets.destinations.push_back(b.id(d));
    return f;
}

NetworkBuilder line(int n, double fid = 1.0, double thr_base = 2.0) {
    NetworkBuilder b;
    for (int i = 0; i < n; ++i) b.node(std::string(1, static_cast<char>('A' + i)));
    for (int i = 0; i + 1 < n; ++i)
        b.link(std::string(1, static_cast<char>('A' + i)),
               std::string(1, static_cast<char>('A' + i + 1)),
               {.level = 1, .fidelity = fid, .throughput = thr_base + i});
    return b;
}

} // namespace

Fixture line3() { return make("line3", line(3), "A", {"C"}); }

Fixture diamond_asym() {
    NetworkBuilder b;
    b.node("A").node("B").node("C").node("D");
    b.link("A", "B", {.fidelity = 0.5, .throughput = 5.0});
    b.link("B", "C", {.fidelity = 0.5, .throughput = 5.0});
    b.link("A", "D", {.fidelity = 1.0, .throughput = 2.0});
    b.link("D", "C", {.fidelity = 1.0, .throughput = 2.0});
    return make("diamond_asym", b, "A", {"C"});
}

Fixture fig1() {
    NetworkBuilder b;
    for (int i = 1; i <= 6; ++i) b.node("R" + std::to_string(i));
    b.switcher("S");
    b.link("R1", "R2", {.level = 1, .fidelity = 0.9, .throughput = 4.0}).in_modes({0, 1});
    b.link("R1", "R3", {.level = 2, .fidelity = 0.8, .throughput = 3.0}).in_modes({0});
    b.link("R1", "R4", {.level = 3, .fidelity = 0.7, .throughput = 2.0}).in_modes({0});
    b.link("R3", "R4", {.level = 1, .fidelity = 1.0, .throughput = 5.0}).in_modes({0});
    b.link("R3", "R5", {.level = 2, .fidelity = 0.8, .throughput = 3.0}).in_modes({0});
    b.link("R4", "R5", {.level = 1, .fidelity = 0.9, .throughput = 4.0}).in_modes({0});
    b.link("R4", "R6", {.level = 2, .fidelity = 0.8, .throughput = 3.0}).in_modes({0});
    b.link("R5", "R6", {.level = 1, .fidelity = 1.0, .throughput = 5.0}).in_modes({0});
    b.link("R2", "R6", {.level = 3, .fidelity = 0.7, .throughput = 2.0}).in_modes({1});
    return make("fig1", b, "R1", {"R6"});
}

std::vector<Fixture> fixture_suite() {
    std::vector<Fixture> all;
    all.push_back(line3());
    all.push_back(make("line4", line(4), "A", {"D"}));
    all.push_back(make("line5", line(5), "A", {"E"}));
    all.push_back(make("longline8", line(8), "A", {"H"}));

    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D");
        b.link("A", "B", {.throughput = 2.0});
        b.link("B", "C", {.throughput = 2.0});
        b.link("A", "D", {.throughput = 2.0});
        b.link("D", "C", {.throughput = 2.0});
        all.push_back(make("diamond_equal", b, "A", {"C"}));
    }
    all.push_back(diamond_asym());
    all.push_back(fig1());

    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D");
        b.link("A", "B").link("A", "C").link("A", "D", {.throughput = 3.0});
        all.push_back(make("star", b, "A", {"D"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C");
        b.link("A", "B", {.throughput = 2.0}).in_modes({0});
        b.link("B", "C", {.throughput = 3.0}).in_modes({1});
        all.push_back(make("two_modes_line", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C");
        b.mode(0, {{"A", "B"}});
        b.mode(1, {{"A", "B"}, {"B", "C"}});
        b.link("A", "B", {.throughput = 2.0});
        b.link("B", "C", {.throughput = 5.0});
        all.push_back(make("parallel_pair", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D");
        b.link("A", "B").link("B", "C").link("C", "D").link("D", "A");
        all.push_back(make("cycle4", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D");
        b.link("A", "B", {.throughput = 4.0});
        b.link("A", "C", {.throughput = 2.0});
        b.link("B", "D", {.fidelity = 0.5, .throughput = 4.0});
        b.link("C", "D", {.throughput = 2.0});
        all.push_back(make("grid4", b, "A", {"D"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D").node("E").node("F").node("G");
        b.link("A", "B").link("A", "C");
        b.link("B", "D").link("B", "E");
        b.link("C", "F").link("C", "G", {.throughput = 2.0});
        all.push_back(make("btree", b, "A", {"G"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D").node("E");
        b.link("A", "B", {.throughput = 1.0}).link("A", "C", {.throughput = 2.0});
        b.link("A", "D", {.throughput = 3.0});
        b.link("B", "E", {.throughput = 3.0}).link("C", "E", {.throughput = 2.0});
        b.link("D", "E", {.fidelity = 0.5, .throughput = 1.0});
        all.push_back(make("wide3", b, "A", {"E"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C");
        b.link("A", "B", {.throughput = 6.0}).link("B", "C", {.throughput = 6.0});
        b.link("A", "C", {.level = 2, .fidelity = 0.5, .throughput = 2.0});
        all.push_back(make("shortcut", b, "A", {"C"}));
    }
    all.push_back(make("lowfid_line", line(3, 0.4), "A", {"C"}));
    all.push_back(make("multidest", line(5), "A", {"C", "E"}));
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D");
        b.link("A", "B", {.throughput = 2.0, .utility = 10.0});
        b.link("B", "C", {.throughput = 2.0, .utility = 10.0});
        b.link("A", "D", {.throughput = 2.0, .utility = 0.1});
        b.link("D", "C", {.throughput = 2.0, .utility = 0.1});
        all.push_back(make("skew_utility", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C");
        b.link("A", "B", {.throughput = 2.0, .utility = 0.0});
        b.link("B", "C", {.throughput = 3.0, .utility = 0.0});
        all.push_back(make("zero_utility", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C");
        b.link("A", "B", {.throughput = 2.0}).in_modes({0, 1});
        b.link("B", "C", {.throughput = 3.0}).in_modes({0, 1});
        all.push_back(make("line3_2modes", b, "A", {"C"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D").node("E").node("F");
        b.link("A", "B", {.throughput = 9.0}).link("B", "C", {.throughput = 1.0});
        b.link("C", "F", {.throughput = 9.0});
        b.link("A", "D", {.throughput = 3.0}).link("D", "E", {.throughput = 3.0});
        b.link("E", "F", {.throughput = 3.0});
        all.push_back(make("bottleneck", b, "A", {"F"}));
    }
    {
        NetworkBuilder b;
        for (int i = 1; i <= 6; ++i) b.node("R" + std::to_string(i));
        b.switcher("S");
        b.link("R1", "R2", {.level = 1, .fidelity = 0.4, .throughput = 4.0}).in_modes({0, 1});
        b.link("R1", "R3", {.level = 2, .fidelity = 0.6, .throughput = 3.0}).in_modes({0});
        b.link("R1", "R4", {.level = 3, .fidelity = 0.9, .throughput = 2.0}).in_modes({0});
        b.link("R3", "R4", {.level = 1, .fidelity = 1.0, .throughput = 5.0}).in_modes({0});
        b.link("R3", "R5", {.level = 2, .fidelity = 0.3, .throughput = 3.0}).in_modes({0});
        b.link("R4", "R5", {.level = 1, .fidelity = 0.8, .throughput = 4.0}).in_modes({0});
        b.link("R4", "R6", {.level = 2, .fidelity = 0.5, .throughput = 3.0}).in_modes({0});
        b.link("R5", "R6", {.level = 1, .fidelity = 1.0, .throughput = 5.0}).in_modes({0});
        b.link("R2", "R6", {.level = 3, .fidelity = 0.7, .throughput = 8.0}).in_modes({1});
        all.push_back(make("fig1_lowfid", b, "R1", {"R6"}));
    }
    {
        NetworkBuilder b;
        b.node("A").node("B").node("C").node("D").node("E");
        b.link("A", "B", {.throughput = 5.0}).link("B", "E", {.fidelity = 0.5});
        b.link("A", "C", {.throughput = 3.0}).link("C", "E", {.throughput = 3.0});
        b.link("A", "D", {.throughput = 1.0});
        b.link("D", "E", {.fidelity = 0.25, .throughput = 8.0});
        all.push_back(make("triple_tradeoff", b, "A", {"E"}));
    }
    return all;
}

} // namespace qnetopt::testing
