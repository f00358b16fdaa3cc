#include "qnetopt/json_io.hpp"

#include <cerrno>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>
#include <system_error>

namespace qnetopt {

namespace {

void require_keys(const json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& what) {
    if (!obj.is_object()) throw std::runtime_error(what + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw std::runtime_error("unknown key '" + key + "' in " + what);
    }
    for (const std::string& key : required)
        if (!obj.contains(key))
            throw std::runtime_error("missing key '" + key + "' in " + what);
}

} // namespace

json network_to_json(const QuantumNetwork& network) {
    json doc;
    doc["nodes"] = json::array();
    for (const Node& n : network.nodes())
        doc["nodes"].push_back({{"id", n.id}, {"label", n.label}, {"storage_cost", n.storage_cost}});
    doc["switchers"] = network.switcher_ids();
    doc["links"] = json::array();
    for (const EntangledLink& l : network.links())
        doc["links"].push_back({{"source", l.source},
                                {"target", l.target},
                                {"level", l.level},
                                {"fidelity", l.fidelity},
                                {"throughput", l.throughput},
                                {"utility", l.utility},
                                {"existence_probability", l.existence_probability}});
    doc["modes"] = json::array();
    for (const SwitcherMode& m : network.modes()) {
        json pairs = json::array();
        for (const auto& [a, b] : m.active_links) pairs.push_back(json::array({a, b}));
        doc["modes"].push_back({{"mode_id", m.mode_id}, {"active_links", pairs}});
    }
    return doc;
}

QuantumNetwork network_from_json(const json& doc) {
    // "meta" carries tool version / seed / config hash on generated
    // files and has no semantic content.
    require_keys(doc, {"nodes", "switchers", "links", "modes"}, {"meta"}, "network document");

    std::vector<Node> nodes;
    for (const json& n : doc.at("nodes")) {
        require_keys(n, {"id", "label", "storage_cost"}, {}, "node");
        nodes.push_back({n.at("id").get<NodeId>(), n.at("label").get<std::string>(),
                         n.at("storage_cost").get<double>()});
    }
    std::vector<NodeId> switchers = doc.at("switchers").get<std::vector<NodeId>>();

    std::vector<EntangledLink> links;
    for (const json& l : doc.at("links")) {
        require_keys(l, {"source", "target", "level", "fidelity", "throughput", "utility"},
                     {"existence_probability"}, "link");
        EntangledLink link;
        link.source = l.at("source").get<NodeId>();
        link.target = l.at("target").get<NodeId>();
        link.level = l.at("level").get<int>();
        link.fidelity = l.at("fidelity").get<double>();
        link.throughput = l.at("throughput").get<double>();
        link.utility = l.at("utility").get<double>();
        if (l.contains("existence_probability"))
            link.existence_probability = l.at("existence_probability").get<double>();
        links.push_back(link);
    }

    std::vector<SwitcherMode> modes;
    for (const json& m : doc.at("modes")) {
        require_keys(m, {"mode_id", "active_links"}, {}, "mode");
        SwitcherMode mode;
        mode.mode_id = m.at("mode_id").get<int>();
        for (const json& pair : m.at("active_links")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::runtime_error("mode active_links entries must be [src, dst] pairs");
            mode.active_links.emplace_back(pair[0].get<NodeId>(), pair[1].get<NodeId>());
        }
        modes.push_back(std::move(mode));
    }
    return QuantumNetwork(std::move(nodes), std::move(switchers), std::move(links),
                          std::move(modes));
}

json tree_to_json(const ThroughputTree& tree) {
    json doc;
    doc["nodes"] = tree.nodes;
    doc["edges"] = json::array();
    for (const TreeEdge& e : tree.edges)
        doc["edges"].push_back({{"source", e.source},
                                {"target", e.target},
                                {"throughput", e.throughput},
                                {"level", e.level}});
    doc["reached"] = tree.reached_destinations;
    return doc;
}

ThroughputTree tree_from_json(const json& doc) {
    require_keys(doc, {"nodes", "edges", "reached"}, {}, "tree document");
    ThroughputTree tree;
    tree.nodes = doc.at("nodes").get<std::vector<NodeId>>();
    tree.reached_destinations = doc.at("reached").get<std::vector<NodeId>>();
    std::set<NodeId> targets;
    for (const json& e : doc.at("edges")) {
        require_keys(e, {"source", "target", "throughput", "level"}, {}, "tree edge");
        TreeEdge edge;
        edge.source = e.at("source").get<NodeId>();
        edge.target = e.at("target").get<NodeId>();
        edge.throughput = e.at("throughput").get<double>();
        edge.level = e.at("level").get<int>();
        tree.edges.push_back(edge);
        targets.insert(edge.target);
    }
    for (NodeId n : tree.nodes)
        if (!targets.count(n)) tree.root_set.push_back(n);
    return tree;
}

json schedule_to_json(const AssignmentCycle& cycle) {
    json doc;
    doc["period"] = cycle.period;
    doc["unit_slot_duration"] = cycle.unit_slot_duration;
    doc["assignments"] = json::array();
    for (std::size_t i = 0; i < cycle.slots.size(); ++i)
        doc["assignments"].push_back({{"edge", i}, {"slots", cycle.slots[i]}});
    doc["total_storage_time"] = cycle.total_storage_time;
    return doc;
}

json solution_to_json(const Solution& solution) {
    std::string bits;
    bits.reserve(solution.decision.size());
    for (std::uint8_t b : solution.decision) bits.push_back(b ? '1' : '0');
    return {{"decision_bits", bits},
            {"t_s", solution.objectives.storage_time},
            {"b_f", solution.objectives.throughput},
            {"path_len", solution.objectives.path_length},
            {"tree", tree_to_json(solution.tree)}};
}

json front_to_json(const std::vector<Solution>& front) {
    json arr = json::array();
    for (const Solution& s : front) arr.push_back(solution_to_json(s));
    return arr;
}

std::vector<Objectives> objectives_from_front_json(const json& doc) {
    const json& arr = doc.is_object() && doc.contains("front") ? doc.at("front") : doc;
    if (!arr.is_array()) throw std::runtime_error("front document must be a JSON array");
    std::vector<Objectives> out;
    for (const json& s : arr) {
        Objectives o;
        o.storage_time = s.at("t_s").get<double>();
        o.throughput = s.at("b_f").is_null() ? std::numeric_limits<double>::infinity()
                                             : s.at("b_f").get<double>();
        o.path_length = s.at("path_len").get<int>();
        out.push_back(o);
    }
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::system_error(ENOENT, std::generic_category(), "cannot open " + path);
    json doc;
    in >> doc;
    return doc;
}

QuantumNetwork load_network(const std::string& path) {
    return network_from_json(load_json(path));
}

void save_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::system_error(EIO, std::generic_category(), "cannot write " + path);
    out << doc.dump(2) << '\n';
}

namespace {

CostGroup cost_group_from_json(const json& doc, const std::string& what) {
    require_keys(doc, {"s_base", "c_base"}, {"s_slope", "c_slope"}, what);
    CostGroup g;
    g.step_counts = doc.at("s_base").get<std::vector<double>>();
    g.link_costs = doc.at("c_base").get<std::vector<double>>();
    if (doc.contains("s_slope")) g.step_slopes = doc.at("s_slope").get<std::vector<double>>();
    if (doc.contains("c_slope")) g.link_slopes = doc.at("c_slope").get<std::vector<double>>();
    return g;
}

} // namespace

ClassicalConfig classical_config_from_json(const json& doc) {
    require_keys(doc, {"p", "S"},
                 {"A", "R_A", "nu", "R_nu", "M", "chi_C", "c", "n_steps", "E_k", "E_l",
                  "phi_merge", "swim_limit", "cost_arrays", "init_range", "use_merging"},
                 "classical config");
    ClassicalConfig cfg;
    cfg.model.dimension = doc.at("p").get<int>();
    cfg.population_size = doc.at("S").get<int>();
    if (doc.contains("A")) cfg.model.distribution_a = doc.at("A").get<double>();
    if (doc.contains("R_A")) cfg.model.rate_a = doc.at("R_A").get<double>();
    if (doc.contains("nu")) cfg.model.distribution_nu = doc.at("nu").get<double>();
    if (doc.contains("R_nu")) cfg.model.rate_nu = doc.at("R_nu").get<double>();
    if (doc.contains("M")) cfg.model.tuning = doc.at("M").get<double>();
    if (doc.contains("chi_C")) {
        const json& chi = doc.at("chi_C");
        cfg.model.removal_threshold = chi.is_string()
                                          ? std::numeric_limits<double>::infinity()
                                          : chi.get<double>();
    }
    if (doc.contains("c")) cfg.model.step_sizes = doc.at("c").get<std::vector<double>>();
    if (cfg.model.step_sizes.empty()) cfg.model.step_sizes = {0.1};
    if (doc.contains("n_steps")) cfg.model.steps_per_state = doc.at("n_steps").get<int>();
    if (doc.contains("E_k")) cfg.model.expected_k = doc.at("E_k").get<int>();
    if (doc.contains("E_l")) cfg.model.expected_l = doc.at("E_l").get<int>();
    if (doc.contains("phi_merge")) cfg.model.phi_merge = doc.at("phi_merge").get<double>();
    if (doc.contains("swim_limit")) cfg.model.swim_limit = doc.at("swim_limit").get<int>();
    if (doc.contains("use_merging")) cfg.model.use_merging = doc.at("use_merging").get<bool>();
    if (doc.contains("init_range")) cfg.init_range = doc.at("init_range").get<double>();
    if (doc.contains("cost_arrays")) {
        const json& arrays = doc.at("cost_arrays");
        require_keys(arrays, {}, {"storage", "throughput", "path"}, "cost_arrays");
        if (arrays.contains("storage"))
            cfg.model.storage_group = cost_group_from_json(arrays.at("storage"), "storage group");
        if (arrays.contains("throughput"))
            cfg.model.throughput_group =
                cost_group_from_json(arrays.at("throughput"), "throughput group");
        if (arrays.contains("path"))
            cfg.model.path_group = cost_group_from_json(arrays.at("path"), "path group");
    }
    return cfg;
}

} // namespace qnetopt
