#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "blomkit/field.hpp"
#include "blomkit/matrix.hpp"

namespace blomkit {

/// Field, network size and security threshold shared by both schemes.
struct SchemeParams {
    PrimeField field;
    std::size_t n;       // number of nodes, ids 1..n
    std::size_t lambda;  // compromise threshold

    /// Validates n < q, lambda >= 1 and lambda + 1 <= n.
    SchemeParams(PrimeField field, std::size_t n, std::size_t lambda);
};

/// The (lambda+1) x N public matrix. generator_seed is set for the
/// Vandermonde construction, where column c is the power sequence of s^c and
/// nodes regenerate columns from seeds instead of storing them.
struct PublicMatrixG {
    FieldMatrix matrix;
    std::optional<Residue> generator_seed;
};

/// Symmetric secret matrix held only by the central authority.
struct SecretMatrixD {
    FieldMatrix matrix;

    /// Accepts any square symmetric matrix (e.g. an externally chosen one).
    explicit SecretMatrixD(FieldMatrix m);
};

/// Share matrix (D*G)^T; row k-1 holds node k's private key material.
struct ShareMatrixA {
    FieldMatrix matrix;
};

enum class SchemeKind {
    vandermonde,    // original scheme, seed-regenerable public columns
    adjacency,      // public matrix truncated from the modified adjacency matrix
    random_matrix,  // baseline variant with an unstructured random public matrix
};

/// Stable name used in serialized material ("blom-vandermonde", ...).
std::string_view scheme_label(SchemeKind kind);
SchemeKind scheme_from_label(std::string_view label);

/// Everything one provisioned node holds.
struct NodeKeyMaterial {
    SchemeKind scheme = SchemeKind::vandermonde;
    std::uint64_t q = 0;
    std::size_t lambda = 0;
    NodeId node_id = 0;
    std::vector<Residue> private_row;                   // row node_id of A
    std::optional<Residue> public_seed;                 // vandermonde: s^node_id
    std::optional<std::vector<NodeId>> neighbors;       // adjacency: own neighbor list
    std::optional<std::vector<Residue>> public_column;  // random_matrix: stored column

    friend bool operator==(const NodeKeyMaterial&, const NodeKeyMaterial&) = default;
};

/// Vandermonde public matrix: column c = [1, s^c, (s^c)^2, ..., (s^c)^lambda]
/// for c = 1..N. Rejects s in {0, 1} and N >= q. The shape-level overload
/// skips the scheme-level threshold check, so tall matrices (lambda + 1 > N)
/// can be built directly.
PublicMatrixG gen_vandermonde(const PrimeField& f, std::size_t n, std::size_t lambda, Residue s);
PublicMatrixG gen_vandermonde(const SchemeParams& params, Residue s);

/// Random symmetric (lambda+1) x (lambda+1) matrix, deterministic in
/// rng_seed: the upper triangle is filled row-major with uniform residues
/// and mirrored.
SecretMatrixD gen_secret_matrix(const SchemeParams& params, std::uint64_t rng_seed);

/// A = (D*G)^T mod q.
ShareMatrixA compute_share_matrix(const SecretMatrixD& d, const PublicMatrixG& g,
                                  const PrimeField& f);

/// Key material for one node: its private row of A plus, for the Vandermonde
/// construction, the regeneration seed s^node_id. Adjacency provisioning
/// attaches neighbor knowledge afterwards (see setup_modified_scheme).
NodeKeyMaterial provision_node(const ShareMatrixA& a, const PublicMatrixG& g,
                               NodeId node_id, const PrimeField& f);

/// Expands a stored seed into the public column [1, seed, ..., seed^lambda].
/// Rejects seed == 0.
std::vector<Residue> derive_column_from_seed(Residue seed, std::size_t lambda,
                                             const PrimeField& f);

/// A pairwise key together with the unreduced dot product it came from.
/// Accumulation is wide-integer with a single reduction at the end, so raw
/// is exactly the schoolbook row-times-column value.
struct PairwiseKey {
    std::uint64_t raw = 0;
    Residue key = 0;

    friend bool operator==(const PairwiseKey&, const PairwiseKey&) = default;
};

PairwiseKey pairwise_key(std::span<const Residue> private_row,
                         std::span<const Residue> public_column, const PrimeField& f);

/// K = A*G with both the reduced entries and the raw dot products exposed.
struct KeyMatrix {
    FieldMatrix reduced;
    std::vector<std::uint64_t> raw;  // row-major, same shape as reduced

    std::uint64_t raw_at(std::size_t i, std::size_t j) const {
        return raw[i * reduced.cols() + j];
    }
};

KeyMatrix full_key_matrix(const ShareMatrixA& a, const PublicMatrixG& g, const PrimeField& f);

} // namespace blomkit
