// End-to-end checks of the command line tool: every subcommand is spawned
// as a real process and judged on exit code plus emitted files/output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out_file =
        fs::temp_directory_path() / ("blomkit_cli_out_" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        std::string(BLOMKIT_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    fs::remove(out_file);
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fixture(const std::string& name) { return fs::path(BLOMKIT_FIXTURES_DIR) / name; }

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("blomkit_test_" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("demo exits zero and prints the key derivations") {
    const RunResult r = run_cli("demo");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    CHECK(r.output.find("808") != std::string::npos);
    CHECK(r.output.find("1214") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("keygen --lambda 3").exit_code == 2);          // missing required options
    CHECK(run_cli("agree --material /nonexistent --i 1 --j 2").exit_code == 2);
    CHECK(run_cli("bench --config /nonexistent --out /tmp/x.csv").exit_code == 2);
}

TEST_CASE("help exits zero") {
    const RunResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("keygen") != std::string::npos);
}

TEST_CASE("keygen + agree round trip, adjacency scheme") {
    const TempDir dir("adjacency");
    const RunResult kg = run_cli("keygen --topology " + fixture("topology6.json").string() +
                                 " --lambda 3 --q 29 --scheme adjacency --seed 7 --out " +
                                 dir.path.string());
    REQUIRE(kg.exit_code == 0);
    for (int k = 1; k <= 6; ++k) {
        CHECK(fs::exists(dir.path / ("node_" + std::to_string(k) + ".json")));
    }
    CHECK(fs::exists(dir.path / "public.json"));

    const auto node2 = nlohmann::json::parse(slurp(dir.path / "node_2.json"));
    CHECK(node2.at("scheme") == "blom-adjacency");
    CHECK(node2.at("neighbors") == nlohmann::json({1, 4}));

    const RunResult agree = run_cli("agree --material " + dir.path.string() + " --i 2 --j 5");
    CHECK(agree.exit_code == 0);
    CHECK(agree.output.find("agreement: yes") != std::string::npos);

    const RunResult self = run_cli("agree --material " + dir.path.string() + " --i 2 --j 2");
    CHECK(self.exit_code == 2);
}

TEST_CASE("keygen + agree round trip, vandermonde scheme") {
    const TempDir dir("vandermonde");
    const RunResult kg = run_cli("keygen --topology " + fixture("topology6.json").string() +
                                 " --lambda 3 --q 29 --scheme vandermonde --seed 9 --out " +
                                 dir.path.string());
    REQUIRE(kg.exit_code == 0);
    const auto node3 = nlohmann::json::parse(slurp(dir.path / "node_3.json"));
    CHECK(node3.at("scheme") == "blom-vandermonde");
    CHECK(node3.contains("public_seed"));

    const std::array<std::pair<int, int>, 3> pairs{{{1, 4}, {2, 5}, {3, 6}}};
    for (const auto& pair : pairs) {
        const RunResult agree = run_cli("agree --material " + dir.path.string() + " --i " +
                                        std::to_string(pair.first) + " --j " +
                                        std::to_string(pair.second));
        CHECK(agree.exit_code == 0);
        CHECK(agree.output.find("agreement: yes") != std::string::npos);
    }
}

TEST_CASE("verify-security flags the bundled topology as dependent") {
    const RunResult r = run_cli("verify-security --topology " + fixture("topology6.json").string() +
                                " --lambda 3 --q 29");
    CHECK(r.exit_code == 1);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report.at("independent") == false);
    CHECK(report.at("exhaustive") == true);
    const auto witness = report.at("witness");
    CHECK(std::find(witness.begin(), witness.end(), 1) != witness.end());
    CHECK(std::find(witness.begin(), witness.end(), 2) != witness.end());
}

TEST_CASE("verify-security passes an independent topology") {
    const TempDir dir("indep");
    const fs::path topo = dir.path / "topology.json";
    std::ofstream(topo) << R"({"n":4,"edges":[[1,2],[1,4],[2,4]]})";
    const RunResult r = run_cli("verify-security --topology " + topo.string() +
                                " --lambda 2 --q 29");
    CHECK(r.exit_code == 0);
    const auto report = nlohmann::json::parse(r.output);
    CHECK(report.at("independent") == true);
}

TEST_CASE("attack recovers the secret only beyond the threshold") {
    const TempDir dir("attack");
    const RunResult kg = run_cli("keygen --topology " + fixture("topology6.json").string() +
                                 " --lambda 3 --q 29 --scheme vandermonde --seed 11 --out " +
                                 dir.path.string());
    REQUIRE(kg.exit_code == 0);

    const RunResult below = run_cli("attack --material " + dir.path.string() +
                                    " --compromise 1,2,3");
    CHECK(below.exit_code == 1);
    const auto ambiguous = nlohmann::json::parse(below.output);
    CHECK(ambiguous.at("solution_space_dim").get<int>() >= 1);
    CHECK(!ambiguous.contains("recovered"));

    const RunResult above = run_cli("attack --material " + dir.path.string() +
                                    " --compromise 1,2,3,4");
    CHECK(above.exit_code == 0);
    const auto exact = nlohmann::json::parse(above.output);
    CHECK(exact.at("solution_space_dim") == 0);
    CHECK(exact.contains("recovered"));
}

TEST_CASE("bench writes a deterministic CSV") {
    const TempDir dir("bench");
    const fs::path config = dir.path / "config.json";
    std::ofstream(config) << R"({
        "networks": [{"n": 6, "lambda": 3}],
        "field_bounds": [50, 100],
        "trials": 2,
        "rng_seed": 5
    })";
    const fs::path csv1 = dir.path / "r1.csv";
    const fs::path csv2 = dir.path / "r2.csv";
    const RunResult r1 = run_cli("bench --config " + config.string() + " --out " + csv1.string());
    const RunResult r2 = run_cli("bench --config " + config.string() + " --out " + csv2.string());
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    const std::string text1 = slurp(csv1);
    CHECK(text1 == slurp(csv2));
    CHECK(text1.rfind("n,lambda,bound,q,scheme,trial_count,", 0) == 0);

    const fs::path bad_config = dir.path / "bad.json";
    std::ofstream(bad_config) << R"({"networks":[{"n":6,"lambda":9}],"field_bounds":[50]})";
    CHECK(run_cli("bench --config " + bad_config.string() + " --out " + csv1.string()).exit_code ==
          2);
}

} // TEST_SUITE
