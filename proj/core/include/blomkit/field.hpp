#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace blomkit {

/// A residue of GF(q), kept fully reduced into [0, q) by every operation.
using Residue = std::uint64_t;

/// 1-based node identifier, shared by topologies and key material.
using NodeId = std::size_t;

/// Trial-division primality test, adequate for desk-scale moduli.
bool is_prime(std::uint64_t n);

/// Largest prime p with p <= bound, or nullopt when no prime exists.
std::optional<std::uint64_t> largest_prime_leq(std::uint64_t bound);

/// Prime field GF(q) with exact modular arithmetic on residues.
///
/// Moduli are desk scale: 2 < q <= 2^31, so a product of two reduced
/// operands always fits a 64-bit intermediate and no arbitrary-precision
/// machinery is needed. Instances are immutable values and every operation
/// is a pure function; safe to share across threads.
class PrimeField {
public:
    /// Throws std::invalid_argument unless q is prime and 2 < q <= 2^31.
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    Residue reduce(std::uint64_t v) const { return v % q_; }

    Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        if (s >= q_) s -= q_;
        return s;
    }

    Residue sub(Residue a, Residue b) const {
        return a >= b ? a - b : a + q_ - b;
    }

    Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }

    Residue mul(Residue a, Residue b) const { return (a * b) % q_; }

    /// base^exp via square-and-multiply; pow(x, 0) == 1 for every x.
    Residue pow(Residue base, std::uint64_t exp) const;

    /// Multiplicative inverse via extended Euclid. Throws std::domain_error
    /// on zero.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_;
};

/// Smallest g >= 2 generating the multiplicative group of GF(q), found by
/// checking g^((q-1)/p) != 1 for every prime p dividing q-1.
Residue find_primitive_element(const PrimeField& f);

} // namespace blomkit
