#pragma once

#include <span>
#include <vector>

#include "blomkit/scheme_instance.hpp"
#include "blomkit/topology.hpp"

namespace blomkit {

/// N x N adjacency matrix with every 0 replaced by q-1: entry (i,j) is 1
/// when i and j are neighbors and q-1 otherwise, including the diagonal.
/// Symmetric by construction.
struct ModifiedAdjacency {
    FieldMatrix matrix;
};

ModifiedAdjacency build_modified_adjacency(const NetworkTopology& topo, const PrimeField& f);

/// The first lambda+1 rows of the modified adjacency matrix, used as the
/// public matrix. No generator seed: columns come from neighbor knowledge.
PublicMatrixG select_public_matrix(const ModifiedAdjacency& adj, std::size_t lambda);

/// Column j of the truncated public matrix, computed from the topology
/// without materializing the matrix.
std::vector<Residue> node_public_column(const NetworkTopology& topo, NodeId j,
                                        std::size_t lambda, const PrimeField& f);

/// Same column, computed from node j's neighbor list alone (the form a peer
/// receives in a plaintext exchange).
std::vector<Residue> column_from_neighbors(std::span<const NodeId> neighbors_of_j,
                                           std::size_t lambda, const PrimeField& f);

/// Full central-authority provisioning of the adjacency scheme. The omega
/// key spaces of the protocol are generated from rng_seed, but only the
/// first is provisioned.
SchemeInstance setup_modified_scheme(const NetworkTopology& topo, std::size_t lambda,
                                     const PrimeField& f, std::uint64_t rng_seed,
                                     std::size_t omega = 1);
SchemeInstance setup_modified_scheme(const NetworkTopology& topo, std::size_t lambda,
                                     const PrimeField& f, SecretMatrixD d);

} // namespace blomkit
