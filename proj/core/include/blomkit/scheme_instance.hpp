#pragma once

#include <optional>
#include <vector>

#include "blomkit/blom.hpp"
#include "blomkit/topology.hpp"

namespace blomkit {

/// A fully provisioned deployment: the central authority's matrices plus
/// every node's key material. Values only; instances can be copied and
/// shared across threads freely.
struct SchemeInstance {
    SchemeKind kind;
    SchemeParams params;
    PublicMatrixG public_matrix;
    SecretMatrixD secret;
    ShareMatrixA shares;
    std::vector<NodeKeyMaterial> materials;   // index k-1 -> node k
    std::optional<NetworkTopology> topology;  // adjacency scheme only
};

SchemeInstance setup_vandermonde_scheme(const SchemeParams& params, Residue s,
                                        std::uint64_t rng_seed);
SchemeInstance setup_vandermonde_scheme(const SchemeParams& params, Residue s, SecretMatrixD d);

/// Baseline variant: a fully random public matrix with no column structure.
/// Columns cannot be regenerated from seeds, so each node stores its own.
SchemeInstance setup_random_matrix_scheme(const SchemeParams& params, std::uint64_t matrix_seed,
                                          std::uint64_t d_seed);
SchemeInstance setup_random_matrix_scheme(const SchemeParams& params, std::uint64_t matrix_seed,
                                          SecretMatrixD d);

/// The public column node i uses to reach node j, obtained the way the
/// scheme prescribes: seed expansion (vandermonde), neighbor knowledge
/// (adjacency), or the stored column (random_matrix).
std::vector<Residue> acquire_public_column(const SchemeInstance& instance, NodeId j);

} // namespace blomkit
