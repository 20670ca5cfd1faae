#pragma once

#include <cstdint>

#include "blomkit/scheme_instance.hpp"

namespace blomkit {

/// Declared accounting model for digit-level arithmetic effort.
///
/// Costs follow schoolbook base-`radix` arithmetic:
///   multiply a*b   -> digits(a)*digits(b) digit multiplications, plus
///                     digits(a)*digits(b) - digits(a) digit additions for
///                     accumulating partial products when b has more than
///                     one digit;
///   add a+b        -> max(digits(a), digits(b)) digit additions;
///   reduce a mod q -> one long-division pass charged digits(a)*digits(q)
///                     digit operations.
/// total_effort is the weighted sum of those charges.
///
/// With `shortcut` set, a measured derivation skips multiplications by 0 or
/// 1 entirely and charges a multiplication by q-1 as a single subtraction
/// (max(digits(q-1), digits(x)) digit additions), computing q-x instead of
/// the full product. Keys are unchanged; only the charges and the internal
/// accumulation differ.
struct CostModelSpec {
    unsigned radix = 10;
    std::uint64_t mult_weight = 1;
    std::uint64_t add_weight = 1;
    std::uint64_t reduction_weight = 1;
    bool shortcut = false;

    friend bool operator==(const CostModelSpec&, const CostModelSpec&) = default;
};

/// Counters accumulated over one measurement. Ledgers merge componentwise
/// and are never shared between concurrent measurements.
struct CostLedger {
    std::uint64_t digit_mults = 0;
    std::uint64_t digit_adds = 0;
    std::uint64_t reductions = 0;
    std::uint64_t total_effort = 0;

    void merge(const CostLedger& other) {
        digit_mults += other.digit_mults;
        digit_adds += other.digit_adds;
        reductions += other.reductions;
        total_effort += other.total_effort;
    }

    friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

/// Number of base-radix digits of n; digits(0) == 1.
unsigned digits(std::uint64_t n, unsigned radix = 10);

CostLedger cost_of_mul(std::uint64_t a, std::uint64_t b, const CostModelSpec& spec);
CostLedger cost_of_add(std::uint64_t a, std::uint64_t b, const CostModelSpec& spec);
CostLedger cost_of_reduction(std::uint64_t a, std::uint64_t q, const CostModelSpec& spec);

struct MeasuredKey {
    Residue key = 0;
    CostLedger ledger;
};

/// One full key derivation by node i toward node j, with every arithmetic
/// step charged to the ledger: column acquisition (seed expansion for the
/// vandermonde scheme; free for adjacency and random_matrix, where the
/// column comes from knowledge or a plaintext message), the dot product
/// with end-only reduction, and the final reduction. The returned key
/// always equals the unmeasured pairwise_key result.
MeasuredKey measured_key_agreement(const SchemeInstance& instance, NodeId i, NodeId j,
                                   const CostModelSpec& spec);

} // namespace blomkit
