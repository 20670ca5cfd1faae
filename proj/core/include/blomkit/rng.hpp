#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "blomkit/field.hpp"

namespace blomkit {

/// One splitmix64 step; advances state and returns the next output word.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministically folds tag values into a base seed, so independent
/// streams (per trial, per purpose) can be derived from one experiment seed.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

/// Deterministic generator. Raw mt19937_64 output is standard-specified, and
/// all derived draws below avoid std::uniform_int_distribution, so streams
/// are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, n) via rejection sampling; unbiased for any n >= 1.
    std::uint64_t below(std::uint64_t n);

    Residue residue(const PrimeField& f) { return below(f.modulus()); }

    /// Uniform on [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

} // namespace blomkit
