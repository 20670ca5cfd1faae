#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "blomkit/blom.hpp"
#include "blomkit/experiment.hpp"
#include "blomkit/security.hpp"
#include "blomkit/topology.hpp"

namespace blomkit {

/// Raised on malformed or inconsistent serialized input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-node key material document:
///   {"scheme": "blom-vandermonde" | "blom-adjacency", "q": ..., "lambda": ...,
///    "node_id": ..., "private_row": [...], "public_seed": ... | "neighbors": [...]}
/// Output is canonical (fixed key order, sorted neighbor list), so
/// serialize/parse round-trips are byte-exact.
std::string to_json(const NodeKeyMaterial& material);
NodeKeyMaterial material_from_json(std::string_view text);

/// Topology document: {"n": ..., "edges": [[i, j], ...]} with canonical
/// (min, max) sorted edges.
std::string to_json(const NetworkTopology& topo);
NetworkTopology topology_from_json(std::string_view text);

std::string to_json(const CostModelSpec& spec);
CostModelSpec cost_model_from_json(std::string_view text);

std::string to_json(const SecurityReport& report);
std::string to_json(const RecoveryResult& result);

std::string to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(std::string_view text);

/// Public deployment parameters, written by `keygen` next to the per-node
/// material so verification and attack tooling can rebuild the public
/// matrix.
struct PublicParameters {
    SchemeKind scheme = SchemeKind::vandermonde;
    std::uint64_t q = 0;
    std::size_t lambda = 0;
    std::size_t n = 0;
    std::optional<Residue> generator;              // vandermonde: the element s
    std::optional<NetworkTopology> topology;       // adjacency

    friend bool operator==(const PublicParameters&, const PublicParameters&) = default;
};

std::string to_json(const PublicParameters& params);
PublicParameters public_parameters_from_json(std::string_view text);

} // namespace blomkit
