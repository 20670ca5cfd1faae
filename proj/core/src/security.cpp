#include "blomkit/security.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "blomkit/matrix.hpp"
#include "blomkit/rng.hpp"

namespace blomkit {

namespace {

// C(n, k), saturating at uint64 max.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<NodeId> to_node_ids(std::span<const std::size_t> zero_based) {
    std::vector<NodeId> ids;
    ids.reserve(zero_based.size());
    for (std::size_t c : zero_based) ids.push_back(c + 1);
    return ids;
}

} // namespace

SecurityReport check_lambda_secure(const PublicMatrixG& g, std::size_t lambda,
                                   const PrimeField& f, std::uint64_t subset_limit,
                                   std::uint64_t sample_seed) {
    const std::size_t n = g.matrix.cols();
    const std::size_t k = lambda + 1;
    if (k > n) {
        throw std::invalid_argument("check_lambda_secure: need lambda + 1 <= column count");
    }

    SecurityReport report;
    const std::uint64_t total = binomial_saturating(n, k);

    if (total <= subset_limit) {
        report.exhaustive = true;
        std::vector<std::size_t> subset(k);
        for (std::size_t i = 0; i < k; ++i) subset[i] = i;
        while (true) {
            ++report.checked_subsets;
            if (!columns_linearly_independent(g.matrix, subset, f)) {
                report.independent = false;
                report.witness = to_node_ids(subset);
                return report;
            }
            // Advance to the next lexicographic k-combination of 0..n-1.
            std::size_t i = k;
            while (i-- > 0) {
                if (subset[i] != i + n - k) break;
                if (i == 0) return report;  // every index at its maximum
            }
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        }
    }

    report.exhaustive = false;
    Rng rng(sample_seed);
    std::set<std::vector<std::size_t>> seen;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = subset_limit * 20 + 100;
    while (seen.size() < subset_limit && attempts < max_attempts) {
        ++attempts;
        // Floyd's algorithm: k distinct indices from 0..n-1.
        std::set<std::size_t> picked;
        for (std::size_t r = n - k; r < n; ++r) {
            const std::size_t v = static_cast<std::size_t>(rng.below(r + 1));
            picked.insert(picked.count(v) ? r : v);
        }
        std::vector<std::size_t> subset(picked.begin(), picked.end());
        if (!seen.insert(subset).second) continue;
        ++report.checked_subsets;
        if (!columns_linearly_independent(g.matrix, subset, f)) {
            report.independent = false;
            report.witness = to_node_ids(subset);
            return report;
        }
    }
    return report;
}

namespace {

// Index of unknown D[a][b] (a <= b) in the packed upper triangle.
std::size_t triangle_index(std::size_t a, std::size_t b, std::size_t dim) {
    return a * dim - a * (a - 1) / 2 + (b - a);
}

} // namespace

RecoveryResult recover_secret_matrix(std::span<const CompromisedNode> compromised,
                                     const PublicMatrixG& g, const PrimeField& f) {
    if (compromised.empty()) {
        throw std::invalid_argument("recover_secret_matrix: need at least one compromised node");
    }
    const std::size_t dim = g.matrix.rows();  // lambda + 1
    const std::size_t n = g.matrix.cols();
    const std::size_t unknowns = dim * (dim + 1) / 2;

    FieldMatrix coeffs(compromised.size() * dim, unknowns);
    std::vector<Residue> rhs;
    rhs.reserve(compromised.size() * dim);
    std::size_t eq = 0;
    for (const auto& node : compromised) {
        if (node.node_id < 1 || node.node_id > n) {
            throw std::out_of_range("recover_secret_matrix: node id outside 1..n");
        }
        if (node.private_row.size() != dim) {
            throw std::invalid_argument("recover_secret_matrix: private row length is not lambda+1");
        }
        const std::size_t col = node.node_id - 1;
        // Row node_id of A satisfies, for each r: sum_t D[r][t] * G[t][col] = row[r].
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t t = 0; t < dim; ++t) {
                const std::size_t u = triangle_index(std::min(r, t), std::max(r, t), dim);
                coeffs.at(eq, u) = f.add(coeffs.at(eq, u), g.matrix.at(t, col));
            }
            rhs.push_back(f.reduce(node.private_row[r]));
            ++eq;
        }
    }

    const LinearSystemSolution sol = solve_linear_system(coeffs, rhs, f);
    RecoveryResult result;
    switch (sol.kind) {
        case LinearSystemSolution::Kind::inconsistent:
            throw InconsistentSystemError(
                "recover_secret_matrix: compromised rows are mutually inconsistent");
        case LinearSystemSolution::Kind::underdetermined:
            result.solution_space_dim = unknowns - sol.rank;
            return result;
        case LinearSystemSolution::Kind::unique: {
            FieldMatrix d(dim, dim);
            for (std::size_t a = 0; a < dim; ++a) {
                for (std::size_t b = a; b < dim; ++b) {
                    const Residue v = sol.solution[triangle_index(a, b, dim)];
                    d.at(a, b) = v;
                    d.at(b, a) = v;
                }
            }
            result.recovered = SecretMatrixD(std::move(d));
            result.solution_space_dim = 0;
            return result;
        }
    }
    throw std::logic_error("recover_secret_matrix: unreachable");
}

std::optional<ColumnDependence> find_column_dependence(const PublicMatrixG& g,
                                                       std::span<const NodeId> subset,
                                                       const PrimeField& f) {
    FieldMatrix sub(g.matrix.rows(), subset.size());
    for (std::size_t c = 0; c < subset.size(); ++c) {
        const NodeId id = subset[c];
        if (id < 1 || id > g.matrix.cols()) {
            throw std::out_of_range("find_column_dependence: column id outside 1..n");
        }
        for (std::size_t r = 0; r < g.matrix.rows(); ++r) {
            sub.at(r, c) = g.matrix.at(r, id - 1);
        }
    }
    const auto kernel = nullspace_vector(sub, f);
    if (!kernel) return std::nullopt;

    // Solve the kernel relation for the last column with nonzero coefficient.
    std::size_t target_pos = kernel->size();
    for (std::size_t p = kernel->size(); p-- > 0;) {
        if ((*kernel)[p] != 0) {
            target_pos = p;
            break;
        }
    }
    const Residue inv_target = f.inv((*kernel)[target_pos]);
    ColumnDependence dep;
    dep.target = subset[target_pos];
    for (std::size_t p = 0; p < kernel->size(); ++p) {
        if (p == target_pos || (*kernel)[p] == 0) continue;
        dep.combination.emplace_back(subset[p], f.neg(f.mul((*kernel)[p], inv_target)));
    }
    return dep;
}

namespace {

std::optional<Residue> lookup_key(const std::vector<KnownKey>& keys, NodeId a, NodeId b) {
    for (const auto& k : keys) {
        if ((k.a == a && k.b == b) || (k.a == b && k.b == a)) return k.key;
    }
    return std::nullopt;
}

std::optional<Residue> predict_via_dependence(const ColumnDependence& dep,
                                              const std::vector<KnownKey>& keys, NodeId holder,
                                              const PrimeField& f) {
    Residue acc = 0;
    for (const auto& [source, coeff] : dep.combination) {
        const auto known = lookup_key(keys, holder, source);
        if (!known) return std::nullopt;
        acc = f.add(acc, f.mul(coeff, *known));
    }
    return acc;
}

} // namespace

std::optional<Residue> predict_foreign_key(const AttackerKnowledge& knowledge,
                                           const PublicMatrixG& g, NodeId i, NodeId j,
                                           const PrimeField& f) {
    const std::size_t n = g.matrix.cols();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw std::out_of_range("predict_foreign_key: node id outside 1..n");
    }
    if (knowledge.recovery && knowledge.recovery->recovered) {
        // K_ij = g_i^T * D * g_j.
        const FieldMatrix& d = knowledge.recovery->recovered->matrix;
        const auto col_i = g.matrix.column(i - 1);
        const auto col_j = g.matrix.column(j - 1);
        Residue key = 0;
        for (std::size_t r = 0; r < d.rows(); ++r) {
            Residue inner = 0;
            for (std::size_t t = 0; t < d.cols(); ++t) {
                inner = f.add(inner, f.mul(d.at(r, t), col_j[t]));
            }
            key = f.add(key, f.mul(col_i[r], inner));
        }
        return key;
    }
    if (knowledge.dependence) {
        // K_ij = sum coeff * K_{i,m} when column j depends on columns m, and
        // symmetrically through K_ji when the dependence names column i.
        if (knowledge.dependence->target == j) {
            return predict_via_dependence(*knowledge.dependence, knowledge.known_keys, i, f);
        }
        if (knowledge.dependence->target == i) {
            return predict_via_dependence(*knowledge.dependence, knowledge.known_keys, j, f);
        }
    }
    return std::nullopt;
}

} // namespace blomkit
