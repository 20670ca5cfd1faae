#include <doctest.h>

#include <stdexcept>
#include <set>

#include "blomkit/field.hpp"
#include "blomkit/rng.hpp"
#include "test_data.hpp"

using namespace blomkit;

TEST_SUITE("field") {

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 32), std::invalid_argument);
    CHECK(PrimeField(3).modulus() == 3);
    CHECK(PrimeField(29).modulus() == 29);
}

TEST_CASE("addition examples") {
    const PrimeField f(29);
    CHECK(f.add(0, 7) == 7);
    CHECK(f.add(28, 1) == 0);
    CHECK(f.add(20, 24) == testdata::oracle_add(20, 24, 29));
    CHECK(f.add(20, 24) == 15);
}

TEST_CASE("multiplication examples") {
    const PrimeField f(29);
    CHECK(f.mul(1, 17) == 17);
    CHECK(f.mul(28, 28) == 1);
    CHECK(f.mul(20, 28) == testdata::oracle_mul(20, 28, 29));
    CHECK(f.mul(20, 28) == 9);
}

TEST_CASE("power examples") {
    const PrimeField f(29);
    CHECK(f.pow(5, 0) == 1);
    CHECK(f.pow(2, 14) == testdata::oracle_pow(2, 14, 29));
    CHECK(f.pow(2, 14) == 28);
    CHECK(f.pow(2, 28) == testdata::oracle_pow(2, 28, 29));
    CHECK(f.pow(2, 28) == 1);
}

TEST_CASE("add and mul agree with the wide-integer oracle on random pairs") {
    for (std::uint64_t q : {29ull, 47ull, 97ull, 347ull}) {
        const PrimeField f(q);
        Rng rng(q * 7919 + 1);
        std::size_t mismatches = 0;
        for (int i = 0; i < 10000; ++i) {
            const Residue a = rng.below(q);
            const Residue b = rng.below(q);
            if (f.add(a, b) != testdata::oracle_add(a, b, q)) ++mismatches;
            if (f.mul(a, b) != testdata::oracle_mul(a, b, q)) ++mismatches;
            if (f.sub(a, b) != (a + q - b) % q) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("results always lie in [0, q)") {
    for (std::uint64_t q : {3ull, 29ull, 347ull}) {
        const PrimeField f(q);
        Rng rng(q);
        std::size_t out_of_range = 0;
        for (int i = 0; i < 2000; ++i) {
            const Residue a = rng.below(q);
            const Residue b = rng.below(q);
            if (f.add(a, b) >= q || f.mul(a, b) >= q || f.sub(a, b) >= q || f.neg(a) >= q) {
                ++out_of_range;
            }
        }
        CHECK(out_of_range == 0);
    }
}

TEST_CASE("Fermat: a^(q-1) = 1 for all nonzero a, exhaustive for q <= 97") {
    for (std::uint64_t q = 3; q <= 97; ++q) {
        if (!testdata::oracle_is_prime(q)) continue;
        const PrimeField f(q);
        std::size_t failures = 0;
        for (Residue a = 1; a < q; ++a) {
            if (f.pow(a, q - 1) != 1) ++failures;
        }
        CHECK(failures == 0);
    }
}

TEST_CASE("inverse agrees with Fermat and rejects zero") {
    const PrimeField f(97);
    for (Residue a = 1; a < 97; ++a) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(a) == f.pow(a, 95));
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("largest_prime_leq examples and sweep against trial division") {
    CHECK(largest_prime_leq(50) == 47);
    CHECK(largest_prime_leq(29) == 29);
    CHECK(!largest_prime_leq(1).has_value());
    CHECK(!largest_prime_leq(0).has_value());
    CHECK(largest_prime_leq(2) == 2);
    for (std::uint64_t bound = 2; bound <= 400; ++bound) {
        std::uint64_t expected = 0;
        for (std::uint64_t p = bound; p >= 2; --p) {
            if (testdata::oracle_is_prime(p)) {
                expected = p;
                break;
            }
        }
        CHECK(largest_prime_leq(bound).value() == expected);
    }
}

TEST_CASE("find_primitive_element examples") {
    CHECK(find_primitive_element(PrimeField(29)) == 2);
    CHECK(find_primitive_element(PrimeField(3)) == 2);
    CHECK(find_primitive_element(PrimeField(7)) == 3);
    // q = 7: 2 has order 3, not primitive.
    CHECK(testdata::oracle_order(2, 7) == 3);
    CHECK(testdata::oracle_order(3, 7) == 6);
}

TEST_CASE("find_primitive_element returns the smallest full-order element") {
    for (std::uint64_t q : {5ull, 11ull, 13ull, 29ull, 47ull, 97ull}) {
        const PrimeField f(q);
        const Residue g = find_primitive_element(f);
        CHECK(testdata::oracle_order(g, q) == q - 1);
        for (Residue h = 2; h < g; ++h) {
            CHECK(testdata::oracle_order(h, q) < q - 1);
        }
    }
}

TEST_CASE("powers of a primitive element are pairwise distinct, exhaustive for q <= 47") {
    for (std::uint64_t q = 3; q <= 47; ++q) {
        if (!testdata::oracle_is_prime(q)) continue;
        const PrimeField f(q);
        const Residue g = find_primitive_element(f);
        std::set<Residue> powers;
        for (std::uint64_t i = 0; i + 1 < q; ++i) {
            powers.insert(f.pow(g, i));
        }
        CHECK(powers.size() == q - 1);
    }
}

} // TEST_SUITE
