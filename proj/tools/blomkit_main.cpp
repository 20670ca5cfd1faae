// blomkit command line tool: worked-example demo, key-material generation,
// key agreement, security verification, secret-matrix recovery and the
// scheme comparison benchmark.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "blomkit/demo.hpp"
#include "blomkit/experiment.hpp"
#include "blomkit/modified.hpp"
#include "blomkit/scheme_instance.hpp"
#include "blomkit/security.hpp"
#include "blomkit/serialization.hpp"

namespace fs = std::filesystem;
using namespace blomkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << content;
}

fs::path node_file(const fs::path& dir, NodeId id) {
    return dir / ("node_" + std::to_string(id) + ".json");
}

NodeKeyMaterial load_material(const fs::path& dir, NodeId id) {
    return material_from_json(read_file(node_file(dir, id)));
}

// The column node `mine` uses toward `peer`, from the peer's serialized
// material (the simulated plaintext exchange).
std::vector<Residue> column_from_material(const NodeKeyMaterial& peer, const PrimeField& f) {
    if (peer.scheme == SchemeKind::vandermonde) {
        return derive_column_from_seed(peer.public_seed.value(), peer.lambda, f);
    }
    return column_from_neighbors(peer.neighbors.value(), peer.lambda, f);
}

int cmd_keygen(const std::string& topology_file, std::size_t lambda, std::uint64_t q,
               const std::string& scheme_name, std::uint64_t seed, const std::string& out_dir) {
    const NetworkTopology topo = topology_from_json(read_file(topology_file));
    const PrimeField field(q);

    SchemeInstance instance = [&] {
        if (scheme_name == "adjacency") {
            return setup_modified_scheme(topo, lambda, field, seed);
        }
        const SchemeParams params(field, topo.node_count(), lambda);
        return setup_vandermonde_scheme(params, find_primitive_element(field), seed);
    }();

    const fs::path dir(out_dir);
    fs::create_directories(dir);
    for (const auto& material : instance.materials) {
        write_file(node_file(dir, material.node_id), to_json(material));
    }

    PublicParameters public_params;
    public_params.scheme = instance.kind;
    public_params.q = q;
    public_params.lambda = lambda;
    public_params.n = topo.node_count();
    if (instance.kind == SchemeKind::vandermonde) {
        public_params.generator = instance.public_matrix.generator_seed;
    } else {
        public_params.topology = topo;
    }
    write_file(dir / "public.json", to_json(public_params));

    std::cout << "wrote " << instance.materials.size() << " node files and public.json to "
              << dir.string() << "\n";
    return kExitOk;
}

int cmd_agree(const std::string& material_dir, NodeId i, NodeId j) {
    if (i == j) {
        throw ConfigError("agree: need two distinct nodes");
    }
    const fs::path dir(material_dir);
    const NodeKeyMaterial mat_i = load_material(dir, i);
    const NodeKeyMaterial mat_j = load_material(dir, j);
    if (mat_i.q != mat_j.q || mat_i.lambda != mat_j.lambda || mat_i.scheme != mat_j.scheme) {
        throw ConfigError("agree: material files come from different deployments");
    }
    const PrimeField field(mat_i.q);
    const PairwiseKey key_i = pairwise_key(mat_i.private_row, column_from_material(mat_j, field),
                                           field);
    const PairwiseKey key_j = pairwise_key(mat_j.private_row, column_from_material(mat_i, field),
                                           field);
    std::cout << "K(" << i << "," << j << ") = " << key_i.key << " (raw " << key_i.raw << ")\n";
    std::cout << "K(" << j << "," << i << ") = " << key_j.key << " (raw " << key_j.raw << ")\n";
    const bool agreed = key_i.key == key_j.key;
    std::cout << "agreement: " << (agreed ? "yes" : "NO") << "\n";
    return agreed ? kExitOk : kExitPropertyFailed;
}

int cmd_verify_security(const std::string& topology_file, std::size_t lambda, std::uint64_t q,
                        std::uint64_t subset_limit, std::uint64_t sample_seed) {
    const NetworkTopology topo = topology_from_json(read_file(topology_file));
    const PrimeField field(q);
    const PublicMatrixG g = select_public_matrix(build_modified_adjacency(topo, field), lambda);
    const SecurityReport report = check_lambda_secure(g, lambda, field, subset_limit, sample_seed);
    std::cout << to_json(report);
    return report.independent ? kExitOk : kExitPropertyFailed;
}

int cmd_attack(const std::string& material_dir, const std::vector<NodeId>& compromise_ids) {
    const fs::path dir(material_dir);
    const PublicParameters public_params =
        public_parameters_from_json(read_file(dir / "public.json"));
    const PrimeField field(public_params.q);

    const PublicMatrixG g = [&] {
        if (public_params.scheme == SchemeKind::vandermonde) {
            return gen_vandermonde(field, public_params.n, public_params.lambda,
                                   public_params.generator.value());
        }
        return select_public_matrix(build_modified_adjacency(*public_params.topology, field),
                                    public_params.lambda);
    }();

    std::vector<CompromisedNode> compromised;
    compromised.reserve(compromise_ids.size());
    for (NodeId id : compromise_ids) {
        const NodeKeyMaterial material = load_material(dir, id);
        compromised.push_back(CompromisedNode{id, material.private_row});
    }

    const RecoveryResult result = recover_secret_matrix(compromised, g, field);
    std::cout << to_json(result);
    return result.recovered ? kExitOk : kExitPropertyFailed;
}

int cmd_bench(const std::string& config_file, const std::string& out_file,
              const std::string& baseline_override) {
    ExperimentConfig config = experiment_config_from_json(read_file(config_file));
    if (baseline_override == "vandermonde") {
        config.baseline = BaselineKind::vandermonde;
    } else if (baseline_override == "random-matrix") {
        config.baseline = BaselineKind::random_matrix;
    }
    const std::vector<ComparisonRow> rows = run_experiment(config);
    const std::string csv = rows_to_csv(rows);
    write_file(out_file, csv);
    std::cout << "wrote " << rows.size() << " rows to " << out_file << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Key pre-distribution toolkit: Blom scheme, adjacency-matrix variant, "
                 "security checks and cost benchmarks"};
    app.require_subcommand(1);

    auto* demo = app.add_subcommand("demo", "run the bundled 6-node worked example");

    auto* keygen = app.add_subcommand("keygen", "provision per-node key material");
    std::string topology_file, out_dir;
    std::string scheme_name = "vandermonde";
    std::size_t lambda = 1;
    std::uint64_t q = 0;
    std::uint64_t seed = 1;
    keygen->add_option("--topology", topology_file, "topology JSON file")->required();
    keygen->add_option("--lambda", lambda, "security threshold")->required();
    keygen->add_option("--q", q, "prime modulus")->required();
    keygen->add_option("--scheme", scheme_name, "vandermonde | adjacency")
        ->check(CLI::IsMember({"vandermonde", "adjacency"}));
    keygen->add_option("--seed", seed, "rng seed for the secret matrix");
    keygen->add_option("--out", out_dir, "output directory")->required();

    auto* agree = app.add_subcommand("agree", "derive the pairwise key from both sides");
    std::string material_dir;
    NodeId node_i = 0, node_j = 0;
    agree->add_option("--material", material_dir, "key material directory")->required();
    agree->add_option("--i", node_i, "first node id")->required();
    agree->add_option("--j", node_j, "second node id")->required();

    auto* verify = app.add_subcommand("verify-security",
                                      "check column independence of the adjacency public matrix");
    std::string verify_topology;
    std::size_t verify_lambda = 1;
    std::uint64_t verify_q = 0;
    std::uint64_t subset_limit = 100000;
    std::uint64_t sample_seed = 0x1b70;
    verify->add_option("--topology", verify_topology, "topology JSON file")->required();
    verify->add_option("--lambda", verify_lambda, "security threshold")->required();
    verify->add_option("--q", verify_q, "prime modulus")->required();
    verify->add_option("--subset-limit", subset_limit,
                       "max subsets to enumerate before sampling");
    verify->add_option("--sample-seed", sample_seed, "seed for sampled subsets");

    auto* attack = app.add_subcommand("attack", "recover the secret matrix from compromised rows");
    std::string attack_dir;
    std::vector<NodeId> compromise_ids;
    attack->add_option("--material", attack_dir, "key material directory")->required();
    attack->add_option("--compromise", compromise_ids, "comma-separated node ids")
        ->required()
        ->delimiter(',');

    auto* bench = app.add_subcommand("bench", "run the scheme comparison grid");
    std::string config_file, bench_out, baseline_override;
    bench->add_option("--config", config_file, "experiment config JSON")->required();
    bench->add_option("--out", bench_out, "output CSV path")->required();
    bench->add_option("--baseline", baseline_override,
                      "override the baseline scheme: vandermonde | random-matrix")
        ->check(CLI::IsMember({"vandermonde", "random-matrix"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (demo->parsed()) return run_demo(std::cout);
        if (keygen->parsed()) {
            return cmd_keygen(topology_file, lambda, q, scheme_name, seed, out_dir);
        }
        if (agree->parsed()) return cmd_agree(material_dir, node_i, node_j);
        if (verify->parsed()) {
            return cmd_verify_security(verify_topology, verify_lambda, verify_q, subset_limit,
                                       sample_seed);
        }
        if (attack->parsed()) return cmd_attack(attack_dir, compromise_ids);
        if (bench->parsed()) return cmd_bench(config_file, bench_out, baseline_override);
    } catch (const InconsistentSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
