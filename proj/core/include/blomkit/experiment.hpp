#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blomkit/cost_model.hpp"
#include "blomkit/scheme_instance.hpp"

namespace blomkit {

struct NetworkShape {
    std::size_t n = 0;
    std::size_t lambda = 0;

    friend bool operator==(const NetworkShape&, const NetworkShape&) = default;
};

enum class TopologySource {
    random,   // fresh connected random graph per trial
    fixture,  // the bundled 6-node example topology
};

enum class BaselineKind {
    vandermonde,    // the original scheme as defined
    random_matrix,  // literal random-public-matrix variant
};

/// Full description of one comparison run: which networks, which field
/// bounds, how many trials, and under which cost model.
struct ExperimentConfig {
    std::vector<NetworkShape> networks;
    std::vector<std::uint64_t> field_bounds;
    std::size_t trials = 10;
    TopologySource topology_source = TopologySource::random;
    double edge_probability = 0.5;
    std::uint64_t rng_seed = 1;
    CostModelSpec cost_model;
    BaselineKind baseline = BaselineKind::vandermonde;
    std::size_t omega = 1;

    /// Throws std::invalid_argument on any inconsistency (no networks, a
    /// bound too small to yield a prime q > n, lambda + 1 > n, ...).
    void validate() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Mean effort of one (network, bound, scheme) cell over `trial_count`
/// trials. Scheme is "original" or "modified".
struct ComparisonRow {
    std::size_t n = 0;
    std::size_t lambda = 0;
    std::uint64_t bound = 0;
    std::uint64_t q = 0;
    std::string scheme;
    std::size_t trial_count = 0;
    double mean_total_effort = 0.0;
    double mean_digit_mults = 0.0;
    double mean_digit_adds = 0.0;

    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

struct AgreementOutcome {
    Residue key_i = 0;  // key node i derived toward j
    Residue key_j = 0;  // key node j derived toward i
    bool agreed = false;
};

/// Simulates the two-message exchange: each side obtains the other's public
/// column (seed, neighbor list, or plaintext column) and derives its key.
/// Rejects i == j and unprovisioned ids.
AgreementOutcome run_key_agreement_exchange(const SchemeInstance& instance, NodeId i, NodeId j);

/// Runs the whole grid: per (network, bound, trial) one shared random
/// topology and one shared secret matrix, both schemes measured over an
/// all-pairs key-agreement pass. Aborts with std::runtime_error if any pair
/// ever disagrees. Rows come out ordered by network, bound, then scheme
/// (original before modified).
std::vector<ComparisonRow> run_experiment(const ExperimentConfig& config);

/// CSV with header n,lambda,bound,q,scheme,trial_count,mean_total_effort,
/// mean_digit_mults,mean_digit_adds. Means are printed in shortest
/// round-trip form, so serialize/parse is lossless and byte-stable.
std::string rows_to_csv(std::span<const ComparisonRow> rows);
std::vector<ComparisonRow> rows_from_csv(std::string_view text);

} // namespace blomkit
