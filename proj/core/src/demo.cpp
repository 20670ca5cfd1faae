#include "blomkit/demo.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "blomkit/modified.hpp"

namespace blomkit {

const NetworkTopology& demo_topology() {
    static const NetworkTopology topo(6, {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 6}});
    return topo;
}

const SecretMatrixD& demo_secret_matrix() {
    static const SecretMatrixD d(FieldMatrix::from_rows({
        {3, 5, 2, 7},
        {5, 6, 9, 1},
        {2, 9, 3, 5},
        {7, 1, 5, 4},
    }));
    return d;
}

const FieldMatrix& demo_expected_share_matrix() {
    static const FieldMatrix a = FieldMatrix::from_rows({
        {26, 9, 5, 24},
        {3, 20, 24, 5},
        {18, 18, 14, 26},
        {22, 20, 28, 14},
        {16, 26, 16, 22},
        {12, 8, 10, 12},
    });
    return a;
}

const std::vector<std::uint64_t>& demo_expected_raw_keys() {
    static const std::vector<std::uint64_t> k = {
        1414, 442,  1090, 1549, 1657, 1792,  //
        268,  1240, 1375, 916,  808,  1456,  //
        1264, 940,  1642, 1642, 1750, 2128,  //
        1056, 1380, 1758, 1812, 1596, 2352,  //
        1106, 1214, 1808, 1538, 1808, 2240,  //
        690,  528,  852,  960,  906,  1176,
    };
    return k;
}

namespace {

void print_matrix(std::ostream& out, const std::string& title, const FieldMatrix& m) {
    out << title << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "   ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << std::setw(5) << m.at(r, c);
        }
        out << "\n";
    }
}

void print_raw(std::ostream& out, const std::string& title, const KeyMatrix& k) {
    out << title << "\n";
    const std::size_t n = k.reduced.rows();
    for (std::size_t r = 0; r < n; ++r) {
        out << "   ";
        for (std::size_t c = 0; c < n; ++c) {
            out << std::setw(6) << k.raw_at(r, c);
        }
        out << "\n";
    }
}

// Names the first diverging entry, e.g. "(2,5): got 807, expected 808".
std::string first_mismatch(const FieldMatrix& got, const FieldMatrix& expected) {
    for (std::size_t r = 0; r < expected.rows(); ++r) {
        for (std::size_t c = 0; c < expected.cols(); ++c) {
            if (got.at(r, c) != expected.at(r, c)) {
                return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): got " +
                       std::to_string(got.at(r, c)) + ", expected " +
                       std::to_string(expected.at(r, c));
            }
        }
    }
    return {};
}

std::string first_mismatch(const std::vector<std::uint64_t>& got,
                           const std::vector<std::uint64_t>& expected, std::size_t cols) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (got[i] != expected[i]) {
            return "(" + std::to_string(i / cols + 1) + "," + std::to_string(i % cols + 1) +
                   "): got " + std::to_string(got[i]) + ", expected " +
                   std::to_string(expected[i]);
        }
    }
    return {};
}

} // namespace

int run_demo(std::ostream& out) {
    const PrimeField field(29);
    const std::size_t lambda = 3;
    const NetworkTopology& topo = demo_topology();
    std::size_t failures = 0;

    const auto check = [&](bool ok, const std::string& what) {
        out << (ok ? "  [ok]   " : "  [FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    out << "Worked example: N = 6, lambda = 3, q = 29\n\n";

    const ModifiedAdjacency adjacency = build_modified_adjacency(topo, field);
    print_matrix(out, "Modified adjacency matrix (0 -> q-1):", adjacency.matrix);

    const SchemeInstance instance = setup_modified_scheme(topo, lambda, field,
                                                          demo_secret_matrix());
    print_matrix(out, "Public matrix G (first lambda+1 rows):", instance.public_matrix.matrix);
    print_matrix(out, "Secret symmetric matrix D:", instance.secret.matrix);
    print_matrix(out, "Share matrix A = (D*G)^T mod 29:", instance.shares.matrix);

    const std::string share_diff =
        first_mismatch(instance.shares.matrix, demo_expected_share_matrix());
    check(share_diff.empty(), share_diff.empty()
                                  ? "share matrix matches the reference values (24 entries)"
                                  : "share matrix mismatch at " + share_diff);

    const KeyMatrix keys = full_key_matrix(instance.shares, instance.public_matrix, field);
    print_raw(out, "Raw key matrix A*G (unreduced dot products):", keys);
    const std::string raw_diff = first_mismatch(keys.raw, demo_expected_raw_keys(), 6);
    check(raw_diff.empty(), raw_diff.empty() ? "raw key matrix matches the reference values"
                                             : "raw key matrix mismatch at " + raw_diff);
    check(is_symmetric(keys.reduced), "reduced key matrix is symmetric");

    const auto key_25 = pairwise_key(instance.materials[1].private_row,
                                     acquire_public_column(instance, 5), field);
    out << "\nK(2,5): raw " << key_25.raw << " -> " << key_25.key << "\n";
    check(key_25.raw == 808 && key_25.key == 25, "K(2,5) = 808 mod 29 = 25");

    const auto key_52 = pairwise_key(instance.materials[4].private_row,
                                     acquire_public_column(instance, 2), field);
    out << "K(5,2): raw " << key_52.raw << " -> " << key_52.key << "\n";
    check(key_52.raw == 1214 && key_52.key == 25, "K(5,2) = 1214 mod 29 = 25");
    check(key_25.key == key_52.key, "nodes 2 and 5 agree on their pairwise key");

    out << "\n" << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
        << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace blomkit
