#include "blomkit/experiment.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "blomkit/demo.hpp"
#include "blomkit/modified.hpp"
#include "blomkit/rng.hpp"

namespace blomkit {

void ExperimentConfig::validate() const {
    if (networks.empty()) {
        throw std::invalid_argument("experiment config: no networks given");
    }
    for (const auto& net : networks) {
        if (net.lambda < 1 || net.lambda + 1 > net.n) {
            throw std::invalid_argument("experiment config: need 1 <= lambda and lambda + 1 <= n");
        }
        if (topology_source == TopologySource::fixture && net.n != demo_topology().node_count()) {
            throw std::invalid_argument("experiment config: the fixture topology has 6 nodes");
        }
        for (std::uint64_t bound : field_bounds) {
            if (bound < net.n + 2) {
                throw std::invalid_argument(
                    "experiment config: bound " + std::to_string(bound) +
                    " too small for a prime q > n = " + std::to_string(net.n));
            }
            const auto q = largest_prime_leq(bound);
            if (!q || *q <= net.n) {
                throw std::invalid_argument("experiment config: no prime q with n < q <= " +
                                            std::to_string(bound));
            }
        }
    }
    if (field_bounds.empty()) {
        throw std::invalid_argument("experiment config: no field bounds given");
    }
    if (trials < 1) {
        throw std::invalid_argument("experiment config: need at least one trial");
    }
    if (edge_probability < 0.0 || edge_probability > 1.0) {
        throw std::invalid_argument("experiment config: edge probability outside [0, 1]");
    }
    if (omega < 1) {
        throw std::invalid_argument("experiment config: omega must be at least 1");
    }
    if (cost_model.radix < 2) {
        throw std::invalid_argument("experiment config: cost model radix must be at least 2");
    }
}

AgreementOutcome run_key_agreement_exchange(const SchemeInstance& instance, NodeId i, NodeId j) {
    if (i == j) {
        throw std::invalid_argument("run_key_agreement_exchange: a node needs no key with itself");
    }
    if (i < 1 || i > instance.params.n || j < 1 || j > instance.params.n) {
        throw std::out_of_range("run_key_agreement_exchange: unprovisioned node id");
    }
    const PrimeField& f = instance.params.field;
    const Residue key_i =
        pairwise_key(instance.materials[i - 1].private_row, acquire_public_column(instance, j), f)
            .key;
    const Residue key_j =
        pairwise_key(instance.materials[j - 1].private_row, acquire_public_column(instance, i), f)
            .key;
    return AgreementOutcome{key_i, key_j, key_i == key_j};
}

namespace {

struct EffortSums {
    std::uint64_t total_effort = 0;
    std::uint64_t digit_mults = 0;
    std::uint64_t digit_adds = 0;
};

// All-pairs pass: every unordered pair measured once, from the lower id's
// side. Verifies agreement for the pair before recording effort.
EffortSums measure_all_pairs(const SchemeInstance& instance, const CostModelSpec& spec) {
    EffortSums sums;
    for (NodeId i = 1; i <= instance.params.n; ++i) {
        for (NodeId j = i + 1; j <= instance.params.n; ++j) {
            const AgreementOutcome outcome = run_key_agreement_exchange(instance, i, j);
            if (!outcome.agreed) {
                throw std::runtime_error("experiment aborted: nodes " + std::to_string(i) +
                                         " and " + std::to_string(j) + " disagree on their key");
            }
            const MeasuredKey measured = measured_key_agreement(instance, i, j, spec);
            sums.total_effort += measured.ledger.total_effort;
            sums.digit_mults += measured.ledger.digit_mults;
            sums.digit_adds += measured.ledger.digit_adds;
        }
    }
    return sums;
}

ComparisonRow make_row(const NetworkShape& net, std::uint64_t bound, std::uint64_t q,
                       std::string scheme, std::size_t trials, const EffortSums& sums) {
    ComparisonRow row;
    row.n = net.n;
    row.lambda = net.lambda;
    row.bound = bound;
    row.q = q;
    row.scheme = std::move(scheme);
    row.trial_count = trials;
    const double t = static_cast<double>(trials);
    row.mean_total_effort = static_cast<double>(sums.total_effort) / t;
    row.mean_digit_mults = static_cast<double>(sums.digit_mults) / t;
    row.mean_digit_adds = static_cast<double>(sums.digit_adds) / t;
    return row;
}

} // namespace

std::vector<ComparisonRow> run_experiment(const ExperimentConfig& config) {
    config.validate();
    std::vector<ComparisonRow> rows;
    rows.reserve(config.networks.size() * config.field_bounds.size() * 2);
    for (const auto& net : config.networks) {
        for (std::uint64_t bound : config.field_bounds) {
            const std::uint64_t q = largest_prime_leq(bound).value();
            const PrimeField field(q);
            const SchemeParams params(field, net.n, net.lambda);
            EffortSums original_sums;
            EffortSums modified_sums;
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const std::uint64_t trial_seed =
                    derive_seed(config.rng_seed, {net.n, net.lambda, bound, trial});

                NetworkTopology topo = [&] {
                    if (config.topology_source == TopologySource::fixture) return demo_topology();
                    Rng topo_rng(derive_seed(trial_seed, {1}));
                    return random_connected_topology(net.n, config.edge_probability, topo_rng);
                }();

                // One secret matrix per trial, shared by both schemes.
                SecretMatrixD d = gen_secret_matrix(params, derive_seed(trial_seed, {2}));

                const SchemeInstance original =
                    config.baseline == BaselineKind::vandermonde
                        ? setup_vandermonde_scheme(params, find_primitive_element(field), d)
                        : setup_random_matrix_scheme(params, derive_seed(trial_seed, {3}), d);
                const SchemeInstance modified =
                    setup_modified_scheme(topo, net.lambda, field, std::move(d));

                const EffortSums original_trial = measure_all_pairs(original, config.cost_model);
                const EffortSums modified_trial = measure_all_pairs(modified, config.cost_model);
                original_sums.total_effort += original_trial.total_effort;
                original_sums.digit_mults += original_trial.digit_mults;
                original_sums.digit_adds += original_trial.digit_adds;
                modified_sums.total_effort += modified_trial.total_effort;
                modified_sums.digit_mults += modified_trial.digit_mults;
                modified_sums.digit_adds += modified_trial.digit_adds;
            }
            rows.push_back(make_row(net, bound, q, "original", config.trials, original_sums));
            rows.push_back(make_row(net, bound, q, "modified", config.trials, modified_sums));
        }
    }
    return rows;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::logic_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("rows_from_csv: bad number '" + std::string(text) + "'");
    }
    return v;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("rows_from_csv: bad integer '" + std::string(text) + "'");
    }
    return v;
}

std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

constexpr std::string_view kCsvHeader =
    "n,lambda,bound,q,scheme,trial_count,mean_total_effort,mean_digit_mults,mean_digit_adds";

} // namespace

std::string rows_to_csv(std::span<const ComparisonRow> rows) {
    std::string out(kCsvHeader);
    out.push_back('\n');
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out.push_back(',');
        out += std::to_string(row.lambda);
        out.push_back(',');
        out += std::to_string(row.bound);
        out.push_back(',');
        out += std::to_string(row.q);
        out.push_back(',');
        out += row.scheme;
        out.push_back(',');
        out += std::to_string(row.trial_count);
        out.push_back(',');
        out += format_double(row.mean_total_effort);
        out.push_back(',');
        out += format_double(row.mean_digit_mults);
        out.push_back(',');
        out += format_double(row.mean_digit_adds);
        out.push_back('\n');
    }
    return out;
}

std::vector<ComparisonRow> rows_from_csv(std::string_view text) {
    std::vector<ComparisonRow> rows;
    std::size_t pos = 0;
    bool saw_header = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kCsvHeader) {
                throw std::invalid_argument("rows_from_csv: unexpected header");
            }
            saw_header = true;
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 9) {
            throw std::invalid_argument("rows_from_csv: expected 9 fields per row");
        }
        ComparisonRow row;
        row.n = parse_u64(fields[0]);
        row.lambda = parse_u64(fields[1]);
        row.bound = parse_u64(fields[2]);
        row.q = parse_u64(fields[3]);
        row.scheme = std::string(fields[4]);
        row.trial_count = parse_u64(fields[5]);
        row.mean_total_effort = parse_double(fields[6]);
        row.mean_digit_mults = parse_double(fields[7]);
        row.mean_digit_adds = parse_double(fields[8]);
        rows.push_back(std::move(row));
    }
    if (!saw_header) {
        throw std::invalid_argument("rows_from_csv: missing header");
    }
    return rows;
}

} // namespace blomkit
