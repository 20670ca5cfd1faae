#include <doctest.h>

#include <stdexcept>
#include <array>
#include <set>

#include "blomkit/blom.hpp"
#include "blomkit/modified.hpp"
#include "blomkit/rng.hpp"
#include "blomkit/scheme_instance.hpp"
#include "test_data.hpp"

using namespace blomkit;

namespace {

SchemeInstance example_instance() {
    return setup_modified_scheme(testdata::example_topology(), 3, PrimeField(29),
                                 SecretMatrixD(testdata::example_secret_d()));
}

} // namespace

TEST_SUITE("blom") {

TEST_CASE("scheme params validation") {
    const PrimeField f(29);
    CHECK_THROWS_AS(SchemeParams(f, 29, 3), std::invalid_argument);  // n >= q
    CHECK_THROWS_AS(SchemeParams(f, 6, 0), std::invalid_argument);   // lambda < 1
    CHECK_THROWS_AS(SchemeParams(f, 3, 3), std::invalid_argument);   // lambda + 1 > n
    const SchemeParams ok(f, 6, 3);
    CHECK(ok.n == 6);
    CHECK(ok.lambda == 3);
}

TEST_CASE("gen_vandermonde matches the direct power formula") {
    const PrimeField f(29);
    const auto g1 = gen_vandermonde(SchemeParams(f, 3, 1), 2);
    CHECK(g1.matrix == FieldMatrix::from_rows({{1, 1, 1}, {2, 4, 8}}));
    CHECK(g1.generator_seed == 2);

    // Tall shape (lambda + 1 > N) through the shape-level overload.
    const auto g2 = gen_vandermonde(f, 2, 2, 2);
    CHECK(g2.matrix == FieldMatrix::from_rows({{1, 1}, {2, 4}, {4, 16}}));

    // Entry (r, c) is s^(c*r) with 1-based columns.
    const auto g3 = gen_vandermonde(SchemeParams(f, 8, 3), 2);
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r <= 3; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (g3.matrix.at(r, c) != testdata::oracle_pow(2, (c + 1) * r, 29)) ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("gen_vandermonde rejects degenerate seeds") {
    const PrimeField f(29);
    const SchemeParams params(f, 6, 3);
    CHECK_THROWS_AS(gen_vandermonde(params, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_vandermonde(params, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_vandermonde(params, 29), std::invalid_argument);
}

TEST_CASE("gen_secret_matrix is symmetric, uniform-looking and deterministic") {
    const PrimeField f(29);
    const SchemeParams params(f, 6, 3);
    const SecretMatrixD d1 = gen_secret_matrix(params, 42);
    const SecretMatrixD d2 = gen_secret_matrix(params, 42);
    const SecretMatrixD d3 = gen_secret_matrix(params, 43);
    CHECK(is_symmetric(d1.matrix));
    CHECK(d1.matrix == d2.matrix);
    CHECK(d1.matrix != d3.matrix);
    CHECK(d1.matrix.rows() == 4);
    for (Residue v : d1.matrix.entries()) CHECK(v < 29);
}

TEST_CASE("an externally chosen symmetric matrix is accepted, asymmetric rejected") {
    CHECK_NOTHROW(SecretMatrixD(testdata::example_secret_d()));
    CHECK_THROWS_AS(SecretMatrixD(FieldMatrix::from_rows({{0, 1}, {2, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(SecretMatrixD(FieldMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("compute_share_matrix reproduces the worked example") {
    const PrimeField f(29);
    const SecretMatrixD d(testdata::example_secret_d());
    const PublicMatrixG g{testdata::example_public_g(), std::nullopt};
    const ShareMatrixA a = compute_share_matrix(d, g, f);
    CHECK(a.matrix == testdata::example_share_a());
}

TEST_CASE("compute_share_matrix identity and zero secrets") {
    const PrimeField f(29);
    const PublicMatrixG g{testdata::example_public_g(), std::nullopt};
    const SecretMatrixD identity(FieldMatrix::identity(4));
    CHECK(compute_share_matrix(identity, g, f).matrix == transpose(g.matrix));
    const SecretMatrixD zero(FieldMatrix(4, 4));
    CHECK(compute_share_matrix(zero, g, f).matrix == FieldMatrix(6, 4));
}

TEST_CASE("provision_node hands out the right rows") {
    const auto instance = example_instance();
    const PrimeField f(29);
    const auto node2 = provision_node(instance.shares, instance.public_matrix, 2, f);
    CHECK(node2.private_row == std::vector<Residue>{3, 20, 24, 5});
    const auto node5 = provision_node(instance.shares, instance.public_matrix, 5, f);
    CHECK(node5.private_row == std::vector<Residue>{16, 26, 16, 22});
    CHECK_THROWS_AS(provision_node(instance.shares, instance.public_matrix, 7, f),
                    std::out_of_range);
    CHECK_THROWS_AS(provision_node(instance.shares, instance.public_matrix, 0, f),
                    std::out_of_range);
}

TEST_CASE("provision_node attaches vandermonde seeds s^k") {
    const PrimeField f(29);
    const SchemeParams params(f, 6, 3);
    const auto g = gen_vandermonde(params, 2);
    const auto a = compute_share_matrix(gen_secret_matrix(params, 7), g, f);
    for (NodeId k = 1; k <= 6; ++k) {
        const auto material = provision_node(a, g, k, f);
        CHECK(material.scheme == SchemeKind::vandermonde);
        CHECK(material.public_seed == f.pow(2, k));
        CHECK(material.private_row.size() == 4);
    }
}

TEST_CASE("derive_column_from_seed") {
    const PrimeField f(29);
    CHECK(derive_column_from_seed(1, 3, f) == std::vector<Residue>{1, 1, 1, 1});
    CHECK(derive_column_from_seed(28, 2, f) == std::vector<Residue>{1, 28, 1});
    CHECK_THROWS_AS(derive_column_from_seed(0, 3, f), std::invalid_argument);

    // Seed 4 = 2^2 regenerates column 2 of the lambda=1 construction.
    const auto g = gen_vandermonde(SchemeParams(f, 3, 1), 2);
    CHECK(derive_column_from_seed(4, 1, f) == g.matrix.column(1));
}

TEST_CASE("seed regeneration matches every stored column") {
    const PrimeField f(29);
    const SchemeParams params(f, 8, 3);
    const auto g = gen_vandermonde(params, 2);
    for (NodeId k = 1; k <= 8; ++k) {
        CHECK(derive_column_from_seed(f.pow(2, k), 3, f) == g.matrix.column(k - 1));
    }
}

TEST_CASE("pairwise_key reproduces the worked-example derivations") {
    const PrimeField f(29);
    const std::vector<Residue> row2{3, 20, 24, 5};
    const std::vector<Residue> col5{28, 28, 1, 28};
    const PairwiseKey k25 = pairwise_key(row2, col5, f);
    CHECK(k25.raw == 808);
    CHECK(k25.key == 25);

    const std::vector<Residue> row5{16, 26, 16, 22};
    const std::vector<Residue> col2{1, 28, 28, 1};
    const PairwiseKey k52 = pairwise_key(row5, col2, f);
    CHECK(k52.raw == 1214);
    CHECK(k52.key == 25);

    const std::vector<Residue> zero{0, 0, 0, 0};
    CHECK(pairwise_key(zero, col5, f) == PairwiseKey{0, 0});

    const std::vector<Residue> shorter{1, 2};
    CHECK_THROWS_AS(pairwise_key(shorter, col5, f), std::invalid_argument);
}

TEST_CASE("full_key_matrix exposes the raw dot products") {
    const auto instance = example_instance();
    const PrimeField f(29);
    const KeyMatrix k = full_key_matrix(instance.shares, instance.public_matrix, f);
    CHECK(k.raw == testdata::example_raw_keys());
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(k.raw_at(1, j) == testdata::example_raw_keys()[6 + j]);
    }
    CHECK(is_symmetric(k.reduced));

    const SecretMatrixD zero(FieldMatrix(4, 4));
    const ShareMatrixA a0 = compute_share_matrix(zero, instance.public_matrix, f);
    const KeyMatrix k0 = full_key_matrix(a0, instance.public_matrix, f);
    CHECK(k0.reduced == FieldMatrix(6, 6));
}

TEST_CASE("raw dot products reduce to the pairwise keys") {
    const auto instance = example_instance();
    const PrimeField f(29);
    const KeyMatrix k = full_key_matrix(instance.shares, instance.public_matrix, f);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(k.raw_at(i, j) % 29 == k.reduced.at(i, j));
        }
    }
}

TEST_CASE("symmetry identity holds for random instances of both schemes") {
    Rng rng(2024);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint64_t q = std::array<std::uint64_t, 3>{29, 47, 97}[trial % 3];
        const PrimeField f(q);
        const std::size_t n = 3 + rng.below(8);           // 3..10
        const std::size_t lambda = 1 + rng.below(n - 1);  // 1..n-1
        const SchemeParams params(f, n, lambda);
        const SecretMatrixD d = gen_secret_matrix(params, rng.next_u64());

        const auto vander = setup_vandermonde_scheme(params, find_primitive_element(f), d);
        const KeyMatrix kv = full_key_matrix(vander.shares, vander.public_matrix, f);
        if (!is_symmetric(kv.reduced)) ++failures;

        Rng topo_rng(rng.next_u64());
        const auto topo = random_connected_topology(n, 0.5, topo_rng);
        const auto modified = setup_modified_scheme(topo, lambda, f, d);
        const KeyMatrix km = full_key_matrix(modified.shares, modified.public_matrix, f);
        if (!is_symmetric(km.reduced)) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("key agreement holds for all pairs, exhaustively per instance") {
    const PrimeField f(29);
    const SchemeParams params(f, 7, 3);
    const auto instance = setup_vandermonde_scheme(params, 2, 99);
    int failures = 0;
    for (NodeId i = 1; i <= 7; ++i) {
        for (NodeId j = 1; j <= 7; ++j) {
            if (i == j) continue;
            const auto ki = pairwise_key(instance.materials[i - 1].private_row,
                                         acquire_public_column(instance, j), f);
            const auto kj = pairwise_key(instance.materials[j - 1].private_row,
                                         acquire_public_column(instance, i), f);
            if (ki.key != kj.key) ++failures;
        }
    }
    CHECK(failures == 0);
}

TEST_CASE("vandermonde lambda-security: every column subset independent") {
    const PrimeField f(29);
    for (std::size_t n : {6, 8}) {
        for (std::size_t lambda : {1, 2, 3}) {
            const auto g = gen_vandermonde(SchemeParams(f, n, lambda), 2);
            // Exhaustive subset enumeration.
            std::vector<std::size_t> subset(lambda + 1);
            for (std::size_t i = 0; i <= lambda; ++i) subset[i] = i;
            int dependent = 0;
            while (true) {
                if (!columns_linearly_independent(g.matrix, subset, f)) ++dependent;
                std::size_t i = subset.size();
                bool done = false;
                while (i-- > 0) {
                    if (subset[i] != i + n - subset.size()) break;
                    if (i == 0) done = true;
                }
                if (done) break;
                ++subset[i];
                for (std::size_t j = i + 1; j < subset.size(); ++j) subset[j] = subset[j - 1] + 1;
            }
            CHECK(dependent == 0);
        }
    }
}

TEST_CASE("scheme labels round-trip") {
    for (SchemeKind kind :
         {SchemeKind::vandermonde, SchemeKind::adjacency, SchemeKind::random_matrix}) {
        CHECK(scheme_from_label(scheme_label(kind)) == kind);
    }
    CHECK_THROWS_AS(scheme_from_label("blom-unknown"), std::invalid_argument);
}

} // TEST_SUITE
