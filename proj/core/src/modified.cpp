#include "blomkit/modified.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "blomkit/rng.hpp"

namespace blomkit {

ModifiedAdjacency build_modified_adjacency(const NetworkTopology& topo, const PrimeField& f) {
    const std::size_t n = topo.node_count();
    const Residue absent = f.modulus() - 1;
    FieldMatrix m(n, n);
    for (NodeId i = 1; i <= n; ++i) {
        for (NodeId j = 1; j <= n; ++j) {
            m.at(i - 1, j - 1) = topo.adjacent(i, j) ? 1 : absent;
        }
    }
    return ModifiedAdjacency{std::move(m)};
}

PublicMatrixG select_public_matrix(const ModifiedAdjacency& adj, std::size_t lambda) {
    const std::size_t n = adj.matrix.cols();
    if (lambda + 1 > n) {
        throw std::invalid_argument("select_public_matrix: need lambda + 1 <= n");
    }
    FieldMatrix m(lambda + 1, n);
    for (std::size_t r = 0; r <= lambda; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m.at(r, c) = adj.matrix.at(r, c);
        }
    }
    return PublicMatrixG{std::move(m), std::nullopt};
}

std::vector<Residue> node_public_column(const NetworkTopology& topo, NodeId j,
                                        std::size_t lambda, const PrimeField& f) {
    if (j < 1 || j > topo.node_count()) {
        throw std::out_of_range("node_public_column: node id " + std::to_string(j) +
                                " outside 1.." + std::to_string(topo.node_count()));
    }
    if (lambda + 1 > topo.node_count()) {
        throw std::invalid_argument("node_public_column: need lambda + 1 <= n");
    }
    return column_from_neighbors(topo.neighbors(j), lambda, f);
}

std::vector<Residue> column_from_neighbors(std::span<const NodeId> neighbors_of_j,
                                           std::size_t lambda, const PrimeField& f) {
    const Residue absent = f.modulus() - 1;
    std::vector<Residue> column(lambda + 1, absent);
    for (NodeId neighbor : neighbors_of_j) {
        if (neighbor >= 1 && neighbor <= lambda + 1) {
            column[neighbor - 1] = 1;
        }
    }
    return column;
}

namespace {

SchemeInstance assemble_modified(const NetworkTopology& topo, std::size_t lambda,
                                 const PrimeField& f, SecretMatrixD d) {
    SchemeParams params(f, topo.node_count(), lambda);
    if (d.matrix.rows() != lambda + 1) {
        throw std::invalid_argument("setup_modified_scheme: secret matrix shape is not lambda+1");
    }
    for (Residue v : d.matrix.entries()) {
        if (v >= f.modulus()) {
            throw std::invalid_argument("setup_modified_scheme: secret matrix entry not reduced");
        }
    }
    PublicMatrixG g = select_public_matrix(build_modified_adjacency(topo, f), lambda);
    ShareMatrixA a = compute_share_matrix(d, g, f);
    std::vector<NodeKeyMaterial> materials;
    materials.reserve(params.n);
    for (NodeId k = 1; k <= params.n; ++k) {
        NodeKeyMaterial material = provision_node(a, g, k, f);
        material.scheme = SchemeKind::adjacency;
        material.neighbors = topo.neighbors(k);
        materials.push_back(std::move(material));
    }
    return SchemeInstance{SchemeKind::adjacency, params,        std::move(g), std::move(d),
                          std::move(a),          std::move(materials), topo};
}

} // namespace

SchemeInstance setup_modified_scheme(const NetworkTopology& topo, std::size_t lambda,
                                     const PrimeField& f, std::uint64_t rng_seed,
                                     std::size_t omega) {
    if (omega < 1) {
        throw std::invalid_argument("setup_modified_scheme: omega must be at least 1");
    }
    SchemeParams params(f, topo.node_count(), lambda);
    std::vector<SecretMatrixD> key_spaces;
    key_spaces.reserve(omega);
    for (std::size_t k = 0; k < omega; ++k) {
        key_spaces.push_back(gen_secret_matrix(params, derive_seed(rng_seed, {k})));
    }
    // Only the first key space is provisioned.
    return assemble_modified(topo, lambda, f, std::move(key_spaces.front()));
}

SchemeInstance setup_modified_scheme(const NetworkTopology& topo, std::size_t lambda,
                                     const PrimeField& f, SecretMatrixD d) {
    return assemble_modified(topo, lambda, f, std::move(d));
}

} // namespace blomkit
