#include "blomkit/serialization.hpp"

#include <algorithm>

#include <json.hpp>

namespace blomkit {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ConfigError(std::string(what) + ": not valid JSON");
    }
    return j;
}

const Json& require(const Json& j, const char* key, const char* what) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ConfigError(std::string(what) + ": missing field '" + key + "'");
    }
    return *it;
}

std::uint64_t require_u64(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_number_unsigned()) {
        throw ConfigError(std::string(what) + ": field '" + key +
                          "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

std::vector<Residue> require_u64_array(const Json& j, const char* key, const char* what) {
    const Json& v = require(j, key, what);
    if (!v.is_array()) {
        throw ConfigError(std::string(what) + ": field '" + key + "' must be an array");
    }
    std::vector<std::uint64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_unsigned()) {
            throw ConfigError(std::string(what) + ": field '" + key +
                              "' must hold nonnegative integers");
        }
        out.push_back(e.get<std::uint64_t>());
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace

std::string to_json(const NodeKeyMaterial& material) {
    Json j;
    j["scheme"] = std::string(scheme_label(material.scheme));
    j["q"] = material.q;
    j["lambda"] = material.lambda;
    j["node_id"] = material.node_id;
    j["private_row"] = material.private_row;
    switch (material.scheme) {
        case SchemeKind::vandermonde:
            if (!material.public_seed) {
                throw ConfigError("key material: vandermonde material needs a public seed");
            }
            j["public_seed"] = *material.public_seed;
            break;
        case SchemeKind::adjacency:
            if (!material.neighbors) {
                throw ConfigError("key material: adjacency material needs a neighbor list");
            }
            j["neighbors"] = *material.neighbors;
            break;
        case SchemeKind::random_matrix:
            throw ConfigError("key material: random-matrix baseline material is not serialized");
    }
    return dump(j);
}

NodeKeyMaterial material_from_json(std::string_view text) {
    const Json j = parse(text, "key material");
    NodeKeyMaterial material;
    const std::string label = require(j, "scheme", "key material").get<std::string>();
    material.scheme = scheme_from_label(label);
    material.q = require_u64(j, "q", "key material");
    material.lambda = require_u64(j, "lambda", "key material");
    material.node_id = require_u64(j, "node_id", "key material");
    material.private_row = require_u64_array(j, "private_row", "key material");

    const PrimeField field(material.q);  // validates the modulus
    if (material.node_id < 1) {
        throw ConfigError("key material: node_id must be positive");
    }
    if (material.private_row.size() != material.lambda + 1) {
        throw ConfigError("key material: private row length must be lambda + 1");
    }
    for (Residue v : material.private_row) {
        if (v >= field.modulus()) {
            throw ConfigError("key material: private row entry not reduced mod q");
        }
    }
    switch (material.scheme) {
        case SchemeKind::vandermonde: {
            const Residue seed = require_u64(j, "public_seed", "key material");
            if (seed == 0 || seed >= field.modulus()) {
                throw ConfigError("key material: public seed must lie in 1..q-1");
            }
            material.public_seed = seed;
            break;
        }
        case SchemeKind::adjacency: {
            auto neighbors = require_u64_array(j, "neighbors", "key material");
            std::sort(neighbors.begin(), neighbors.end());
            for (NodeId id : neighbors) {
                if (id < 1 || id == material.node_id) {
                    throw ConfigError("key material: bad neighbor id");
                }
            }
            material.neighbors = std::move(neighbors);
            break;
        }
        case SchemeKind::random_matrix:
            throw ConfigError("key material: random-matrix baseline material is not serialized");
    }
    return material;
}

std::string to_json(const NetworkTopology& topo) {
    Json j;
    j["n"] = topo.node_count();
    Json edges = Json::array();
    for (const auto& [a, b] : topo.edges()) {
        edges.push_back(Json::array({a, b}));
    }
    j["edges"] = std::move(edges);
    return dump(j);
}

NetworkTopology topology_from_json(std::string_view text) {
    const Json j = parse(text, "topology");
    const std::uint64_t n = require_u64(j, "n", "topology");
    const Json& edges_json = require(j, "edges", "topology");
    if (!edges_json.is_array()) {
        throw ConfigError("topology: field 'edges' must be an array of [i, j] pairs");
    }
    std::vector<NetworkTopology::Edge> edges;
    edges.reserve(edges_json.size());
    for (const auto& e : edges_json) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned()) {
            throw ConfigError("topology: every edge must be a pair of node ids");
        }
        edges.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
    }
    try {
        return NetworkTopology(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(std::string("topology: ") + ex.what());
    }
}

std::string to_json(const CostModelSpec& spec) {
    Json j;
    j["radix"] = spec.radix;
    j["mult_weight"] = spec.mult_weight;
    j["add_weight"] = spec.add_weight;
    j["reduction_weight"] = spec.reduction_weight;
    j["shortcut"] = spec.shortcut;
    return dump(j);
}

namespace {

CostModelSpec cost_model_from(const Json& j) {
    CostModelSpec spec;
    if (j.contains("radix")) spec.radix = static_cast<unsigned>(require_u64(j, "radix", "cost model"));
    if (j.contains("mult_weight")) spec.mult_weight = require_u64(j, "mult_weight", "cost model");
    if (j.contains("add_weight")) spec.add_weight = require_u64(j, "add_weight", "cost model");
    if (j.contains("reduction_weight")) {
        spec.reduction_weight = require_u64(j, "reduction_weight", "cost model");
    }
    if (j.contains("shortcut")) {
        const Json& v = j.at("shortcut");
        if (!v.is_boolean()) throw ConfigError("cost model: field 'shortcut' must be a boolean");
        spec.shortcut = v.get<bool>();
    }
    if (spec.radix < 2) throw ConfigError("cost model: radix must be at least 2");
    return spec;
}

} // namespace

CostModelSpec cost_model_from_json(std::string_view text) {
    return cost_model_from(parse(text, "cost model"));
}

std::string to_json(const SecurityReport& report) {
    Json j;
    j["checked_subsets"] = report.checked_subsets;
    j["independent"] = report.independent;
    j["exhaustive"] = report.exhaustive;
    if (report.witness) {
        j["witness"] = *report.witness;
    }
    return dump(j);
}

std::string to_json(const RecoveryResult& result) {
    Json j;
    j["solution_space_dim"] = result.solution_space_dim;
    if (result.recovered) {
        Json rows = Json::array();
        const FieldMatrix& m = result.recovered->matrix;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
            rows.push_back(std::move(row));
        }
        j["recovered"] = std::move(rows);
    }
    return dump(j);
}

std::string to_json(const ExperimentConfig& config) {
    Json j;
    Json networks = Json::array();
    for (const auto& net : config.networks) {
        networks.push_back(Json{{"n", net.n}, {"lambda", net.lambda}});
    }
    j["networks"] = std::move(networks);
    j["field_bounds"] = config.field_bounds;
    j["trials"] = config.trials;
    j["topology"] = Json{
        {"source", config.topology_source == TopologySource::fixture ? "fixture" : "random"},
        {"edge_probability", config.edge_probability},
    };
    j["rng_seed"] = config.rng_seed;
    j["cost_model"] = Json{
        {"radix", config.cost_model.radix},
        {"mult_weight", config.cost_model.mult_weight},
        {"add_weight", config.cost_model.add_weight},
        {"reduction_weight", config.cost_model.reduction_weight},
        {"shortcut", config.cost_model.shortcut},
    };
    j["baseline"] =
        config.baseline == BaselineKind::random_matrix ? "random-matrix" : "vandermonde";
    j["omega"] = config.omega;
    return dump(j);
}

ExperimentConfig experiment_config_from_json(std::string_view text) {
    const Json j = parse(text, "experiment config");
    ExperimentConfig config;
    const Json& networks = require(j, "networks", "experiment config");
    if (!networks.is_array() || networks.empty()) {
        throw ConfigError("experiment config: 'networks' must be a nonempty array");
    }
    for (const auto& net : networks) {
        NetworkShape shape;
        shape.n = require_u64(net, "n", "experiment config network");
        shape.lambda = require_u64(net, "lambda", "experiment config network");
        config.networks.push_back(shape);
    }
    config.field_bounds = require_u64_array(j, "field_bounds", "experiment config");
    if (j.contains("trials")) config.trials = require_u64(j, "trials", "experiment config");
    if (j.contains("topology")) {
        const Json& topo = j.at("topology");
        if (topo.contains("source")) {
            const std::string source = require(topo, "source", "experiment config").get<std::string>();
            if (source == "random") {
                config.topology_source = TopologySource::random;
            } else if (source == "fixture") {
                config.topology_source = TopologySource::fixture;
            } else {
                throw ConfigError("experiment config: topology source must be random or fixture");
            }
        }
        if (topo.contains("edge_probability")) {
            const Json& p = topo.at("edge_probability");
            if (!p.is_number()) {
                throw ConfigError("experiment config: edge_probability must be a number");
            }
            config.edge_probability = p.get<double>();
        }
    }
    if (j.contains("rng_seed")) config.rng_seed = require_u64(j, "rng_seed", "experiment config");
    if (j.contains("cost_model")) config.cost_model = cost_model_from(j.at("cost_model"));
    if (j.contains("baseline")) {
        const std::string baseline = require(j, "baseline", "experiment config").get<std::string>();
        if (baseline == "vandermonde") {
            config.baseline = BaselineKind::vandermonde;
        } else if (baseline == "random-matrix") {
            config.baseline = BaselineKind::random_matrix;
        } else {
            throw ConfigError("experiment config: baseline must be vandermonde or random-matrix");
        }
    }
    if (j.contains("omega")) config.omega = require_u64(j, "omega", "experiment config");
    try {
        config.validate();
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
    }
    return config;
}

std::string to_json(const PublicParameters& params) {
    Json j;
    j["scheme"] = std::string(scheme_label(params.scheme));
    j["q"] = params.q;
    j["lambda"] = params.lambda;
    j["n"] = params.n;
    if (params.scheme == SchemeKind::vandermonde) {
        if (!params.generator) {
            throw ConfigError("public parameters: vandermonde deployment needs the generator");
        }
        j["generator"] = *params.generator;
    } else if (params.scheme == SchemeKind::adjacency) {
        if (!params.topology) {
            throw ConfigError("public parameters: adjacency deployment needs the topology");
        }
        Json edges = Json::array();
        for (const auto& [a, b] : params.topology->edges()) {
            edges.push_back(Json::array({a, b}));
        }
        j["topology"] = Json{{"n", params.topology->node_count()}, {"edges", std::move(edges)}};
    }
    return dump(j);
}

PublicParameters public_parameters_from_json(std::string_view text) {
    const Json j = parse(text, "public parameters");
    PublicParameters params;
    params.scheme = scheme_from_label(require(j, "scheme", "public parameters").get<std::string>());
    params.q = require_u64(j, "q", "public parameters");
    params.lambda = require_u64(j, "lambda", "public parameters");
    params.n = require_u64(j, "n", "public parameters");
    if (params.scheme == SchemeKind::vandermonde) {
        params.generator = require_u64(j, "generator", "public parameters");
    } else if (params.scheme == SchemeKind::adjacency) {
        const Json& topo = require(j, "topology", "public parameters");
        params.topology = topology_from_json(topo.dump());
    } else {
        throw ConfigError("public parameters: unsupported scheme");
    }
    return params;
}

} // namespace blomkit
