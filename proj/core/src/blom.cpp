#include "blomkit/blom.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "blomkit/rng.hpp"

namespace blomkit {

SchemeParams::SchemeParams(PrimeField field_, std::size_t n_, std::size_t lambda_)
    : field(field_), n(n_), lambda(lambda_) {
    if (n >= field.modulus()) {
        throw std::invalid_argument("SchemeParams: need n < q");
    }
    if (lambda < 1) {
        throw std::invalid_argument("SchemeParams: lambda must be at least 1");
    }
    if (lambda + 1 > n) {
        throw std::invalid_argument("SchemeParams: need lambda + 1 <= n");
    }
}

SecretMatrixD::SecretMatrixD(FieldMatrix m) : matrix(std::move(m)) {
    if (!is_symmetric(matrix)) {
        throw std::invalid_argument("SecretMatrixD: matrix must be square and symmetric");
    }
}

std::string_view scheme_label(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::vandermonde: return "blom-vandermonde";
        case SchemeKind::adjacency: return "blom-adjacency";
        case SchemeKind::random_matrix: return "blom-random-matrix";
    }
    throw std::logic_error("scheme_label: unknown kind");
}

SchemeKind scheme_from_label(std::string_view label) {
    if (label == "blom-vandermonde") return SchemeKind::vandermonde;
    if (label == "blom-adjacency") return SchemeKind::adjacency;
    if (label == "blom-random-matrix") return SchemeKind::random_matrix;
    throw std::invalid_argument("unknown scheme label: " + std::string(label));
}

PublicMatrixG gen_vandermonde(const PrimeField& f, std::size_t n, std::size_t lambda, Residue s) {
    if (s == 0 || s == 1) {
        throw std::invalid_argument("gen_vandermonde: seed element must not be 0 or 1");
    }
    if (s >= f.modulus()) {
        throw std::invalid_argument("gen_vandermonde: seed element not reduced");
    }
    if (n >= f.modulus()) {
        throw std::invalid_argument("gen_vandermonde: need n < q");
    }
    FieldMatrix m(lambda + 1, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Residue base = f.pow(s, c + 1);  // s^c for column c (1-based)
        Residue value = 1;
        for (std::size_t r = 0; r <= lambda; ++r) {
            m.at(r, c) = value;
            value = f.mul(value, base);
        }
    }
    return PublicMatrixG{std::move(m), s};
}

PublicMatrixG gen_vandermonde(const SchemeParams& params, Residue s) {
    return gen_vandermonde(params.field, params.n, params.lambda, s);
}

SecretMatrixD gen_secret_matrix(const SchemeParams& params, std::uint64_t rng_seed) {
    const std::size_t dim = params.lambda + 1;
    Rng rng(rng_seed);
    FieldMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r; c < dim; ++c) {
            const Residue v = rng.residue(params.field);
            m.at(r, c) = v;
            m.at(c, r) = v;
        }
    }
    return SecretMatrixD(std::move(m));
}

ShareMatrixA compute_share_matrix(const SecretMatrixD& d, const PublicMatrixG& g,
                                  const PrimeField& f) {
    return ShareMatrixA{transpose(mat_mul(d.matrix, g.matrix, f))};
}

NodeKeyMaterial provision_node(const ShareMatrixA& a, const PublicMatrixG& g,
                               NodeId node_id, const PrimeField& f) {
    if (node_id < 1 || node_id > a.matrix.rows()) {
        throw std::out_of_range("provision_node: node id " + std::to_string(node_id) +
                                " outside 1.." + std::to_string(a.matrix.rows()));
    }
    NodeKeyMaterial material;
    material.q = f.modulus();
    material.lambda = a.matrix.cols() - 1;
    material.node_id = node_id;
    const auto row = a.matrix.row(node_id - 1);
    material.private_row.assign(row.begin(), row.end());
    if (g.generator_seed) {
        material.scheme = SchemeKind::vandermonde;
        material.public_seed = f.pow(*g.generator_seed, node_id);
    } else {
        material.scheme = SchemeKind::adjacency;
    }
    return material;
}

std::vector<Residue> derive_column_from_seed(Residue seed, std::size_t lambda,
                                             const PrimeField& f) {
    if (seed == 0) {
        throw std::invalid_argument("derive_column_from_seed: zero seed");
    }
    std::vector<Residue> column(lambda + 1);
    Residue value = 1;
    for (std::size_t r = 0; r <= lambda; ++r) {
        column[r] = value;
        value = f.mul(value, seed);
    }
    return column;
}

namespace {

std::uint64_t raw_dot(std::span<const Residue> a, std::span<const Residue> b) {
    unsigned __int128 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<unsigned __int128>(a[i]) * b[i];
    }
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("pairwise_key: raw dot product exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

PairwiseKey pairwise_key(std::span<const Residue> private_row,
                         std::span<const Residue> public_column, const PrimeField& f) {
    if (private_row.size() != public_column.size()) {
        throw std::invalid_argument("pairwise_key: row and column lengths differ");
    }
    const std::uint64_t raw = raw_dot(private_row, public_column);
    return PairwiseKey{raw, f.reduce(raw)};
}

KeyMatrix full_key_matrix(const ShareMatrixA& a, const PublicMatrixG& g, const PrimeField& f) {
    if (a.matrix.cols() != g.matrix.rows()) {
        throw std::invalid_argument("full_key_matrix: share and public shapes disagree");
    }
    const std::size_t n = a.matrix.rows();
    if (g.matrix.cols() != n) {
        throw std::invalid_argument("full_key_matrix: public matrix must have one column per node");
    }
    KeyMatrix out{FieldMatrix(n, n), std::vector<std::uint64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint64_t raw = raw_dot(a.matrix.row(i), g.matrix.column(j));
            out.raw[i * n + j] = raw;
            out.reduced.at(i, j) = f.reduce(raw);
        }
    }
    return out;
}

} // namespace blomkit
