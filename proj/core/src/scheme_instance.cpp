#include "blomkit/scheme_instance.hpp"

#include <stdexcept>
#include <string>

#include "blomkit/modified.hpp"
#include "blomkit/rng.hpp"

namespace blomkit {

namespace {

void check_secret_shape(const SecretMatrixD& d, const SchemeParams& params) {
    if (d.matrix.rows() != params.lambda + 1) {
        throw std::invalid_argument("scheme setup: secret matrix shape is not lambda+1");
    }
    for (Residue v : d.matrix.entries()) {
        if (v >= params.field.modulus()) {
            throw std::invalid_argument("scheme setup: secret matrix entry not reduced");
        }
    }
}

} // namespace

SchemeInstance setup_vandermonde_scheme(const SchemeParams& params, Residue s,
                                        std::uint64_t rng_seed) {
    return setup_vandermonde_scheme(params, s, gen_secret_matrix(params, rng_seed));
}

SchemeInstance setup_vandermonde_scheme(const SchemeParams& params, Residue s, SecretMatrixD d) {
    check_secret_shape(d, params);
    PublicMatrixG g = gen_vandermonde(params, s);
    ShareMatrixA a = compute_share_matrix(d, g, params.field);
    std::vector<NodeKeyMaterial> materials;
    materials.reserve(params.n);
    for (NodeId k = 1; k <= params.n; ++k) {
        materials.push_back(provision_node(a, g, k, params.field));
    }
    return SchemeInstance{SchemeKind::vandermonde, params,
                          std::move(g),            std::move(d),
                          std::move(a),            std::move(materials),
                          std::nullopt};
}

SchemeInstance setup_random_matrix_scheme(const SchemeParams& params, std::uint64_t matrix_seed,
                                          std::uint64_t d_seed) {
    return setup_random_matrix_scheme(params, matrix_seed, gen_secret_matrix(params, d_seed));
}

SchemeInstance setup_random_matrix_scheme(const SchemeParams& params, std::uint64_t matrix_seed,
                                          SecretMatrixD d) {
    check_secret_shape(d, params);
    Rng rng(matrix_seed);
    FieldMatrix m(params.lambda + 1, params.n);
    for (std::size_t r = 0; r <= params.lambda; ++r) {
        for (std::size_t c = 0; c < params.n; ++c) {
            m.at(r, c) = rng.residue(params.field);
        }
    }
    PublicMatrixG g{std::move(m), std::nullopt};
    ShareMatrixA a = compute_share_matrix(d, g, params.field);
    std::vector<NodeKeyMaterial> materials;
    materials.reserve(params.n);
    for (NodeId k = 1; k <= params.n; ++k) {
        NodeKeyMaterial material = provision_node(a, g, k, params.field);
        material.scheme = SchemeKind::random_matrix;
        material.public_column = g.matrix.column(k - 1);
        materials.push_back(std::move(material));
    }
    return SchemeInstance{SchemeKind::random_matrix, params,
                          std::move(g),              std::move(d),
                          std::move(a),              std::move(materials),
                          std::nullopt};
}

std::vector<Residue> acquire_public_column(const SchemeInstance& instance, NodeId j) {
    if (j < 1 || j > instance.params.n) {
        throw std::out_of_range("acquire_public_column: node id " + std::to_string(j) +
                                " outside 1.." + std::to_string(instance.params.n));
    }
    const NodeKeyMaterial& material = instance.materials[j - 1];
    switch (instance.kind) {
        case SchemeKind::vandermonde:
            return derive_column_from_seed(material.public_seed.value(), instance.params.lambda,
                                           instance.params.field);
        case SchemeKind::adjacency:
            return node_public_column(instance.topology.value(), j, instance.params.lambda,
                                      instance.params.field);
        case SchemeKind::random_matrix:
            return material.public_column.value();
    }
    throw std::logic_error("acquire_public_column: unknown scheme kind");
}

} // namespace blomkit
