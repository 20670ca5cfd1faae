#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blomkit/blom.hpp"

namespace blomkit {

/// Outcome of the column-independence check behind the threshold guarantee.
/// `witness` names a dependent (lambda+1)-subset by 1-based column ids and
/// is present exactly when independent is false.
struct SecurityReport {
    std::uint64_t checked_subsets = 0;
    bool independent = true;
    std::optional<std::vector<NodeId>> witness;
    bool exhaustive = true;
};

/// Enumerates (lambda+1)-column subsets of g in lexicographic order when
/// their count fits subset_limit, otherwise samples subsets uniformly
/// without replacement (seeded, deterministic). Stops at the first
/// dependent subset.
SecurityReport check_lambda_secure(const PublicMatrixG& g, std::size_t lambda,
                                   const PrimeField& f, std::uint64_t subset_limit = 100000,
                                   std::uint64_t sample_seed = 0x1b70);

/// A compromised node's identity and extracted private row.
struct CompromisedNode {
    NodeId node_id = 0;
    std::vector<Residue> private_row;
};

/// Raised when compromised rows cannot all come from one consistent
/// deployment.
struct InconsistentSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// `recovered` is present exactly when the compromised rows pin the secret
/// matrix down to a single candidate (solution_space_dim == 0).
struct RecoveryResult {
    std::optional<SecretMatrixD> recovered;
    std::size_t solution_space_dim = 0;
};

/// Treats the upper triangle of D as unknowns (symmetry imposed
/// structurally), collects lambda+1 linear equations per compromised row,
/// and solves over GF(q). Throws InconsistentSystemError on corrupted rows.
RecoveryResult recover_secret_matrix(std::span<const CompromisedNode> compromised,
                                     const PublicMatrixG& g, const PrimeField& f);

/// Column dependence col_target = sum(coeff * col_source), columns named by
/// 1-based ids.
struct ColumnDependence {
    NodeId target = 0;
    std::vector<std::pair<NodeId, Residue>> combination;
};

/// Expresses one column of the subset as a combination of the others, or
/// nullopt when the subset is independent.
std::optional<ColumnDependence> find_column_dependence(const PublicMatrixG& g,
                                                       std::span<const NodeId> subset,
                                                       const PrimeField& f);

/// A pairwise key the attacker has observed.
struct KnownKey {
    NodeId a = 0;
    NodeId b = 0;
    Residue key = 0;
};

/// What an attacker has gathered: a secret-matrix recovery, a column
/// dependence, observed keys, or nothing.
struct AttackerKnowledge {
    std::optional<RecoveryResult> recovery;
    std::optional<ColumnDependence> dependence;
    std::vector<KnownKey> known_keys;
};

/// K_ij from partial knowledge: directly when D was recovered; through a
/// column dependence plus the matching observed keys otherwise. Returns
/// nullopt when the knowledge does not determine the key.
std::optional<Residue> predict_foreign_key(const AttackerKnowledge& knowledge,
                                           const PublicMatrixG& g, NodeId i, NodeId j,
                                           const PrimeField& f);

} // namespace blomkit
