#include "blomkit/cost_model.hpp"

#include <limits>
#include <stdexcept>

namespace blomkit {

unsigned digits(std::uint64_t n, unsigned radix) {
    if (radix < 2) throw std::invalid_argument("digits: radix must be at least 2");
    unsigned count = 1;
    while (n >= radix) {
        n /= radix;
        ++count;
    }
    return count;
}

CostLedger cost_of_mul(std::uint64_t a, std::uint64_t b, const CostModelSpec& spec) {
    const std::uint64_t da = digits(a, spec.radix);
    const std::uint64_t db = digits(b, spec.radix);
    CostLedger delta;
    delta.digit_mults = da * db;
    delta.digit_adds = db > 1 ? da * db - da : 0;
    delta.total_effort = spec.mult_weight * delta.digit_mults + spec.add_weight * delta.digit_adds;
    return delta;
}

CostLedger cost_of_add(std::uint64_t a, std::uint64_t b, const CostModelSpec& spec) {
    CostLedger delta;
    delta.digit_adds = std::max(digits(a, spec.radix), digits(b, spec.radix));
    delta.total_effort = spec.add_weight * delta.digit_adds;
    return delta;
}

CostLedger cost_of_reduction(std::uint64_t a, std::uint64_t q, const CostModelSpec& spec) {
    CostLedger delta;
    delta.reductions = 1;
    delta.total_effort =
        spec.reduction_weight * std::uint64_t{digits(a, spec.radix)} * digits(q, spec.radix);
    return delta;
}

namespace {

// Tracks values and charges together so the measured derivation cannot
// drift from the arithmetic it accounts for.
class Meter {
public:
    Meter(const PrimeField& f, const CostModelSpec& spec) : f_(f), spec_(spec) {}

    const CostLedger& ledger() const { return ledger_; }

    // One term of the dot product. Returns the (possibly unreduced) value
    // contributed to the accumulator.
    std::uint64_t product_term(Residue a, Residue b) {
        const Residue negator = f_.modulus() - 1;
        if (spec_.shortcut) {
            if (a == 0 || b == 0) return 0;
            if (a == 1) return b;
            if (b == 1) return a;
            if (a == negator || b == negator) {
                const Residue x = a == negator ? b : a;
                CostLedger delta;
                delta.digit_adds =
                    std::max(digits(negator, spec_.radix), digits(x, spec_.radix));
                delta.total_effort = spec_.add_weight * delta.digit_adds;
                ledger_.merge(delta);
                return f_.modulus() - x;  // negation instead of a full product
            }
        }
        ledger_.merge(cost_of_mul(a, b, spec_));
        return a * b;
    }

    std::uint64_t accumulate(std::uint64_t acc, std::uint64_t term) {
        ledger_.merge(cost_of_add(acc, term, spec_));
        if (acc > std::numeric_limits<std::uint64_t>::max() - term) {
            throw std::overflow_error("measured_key_agreement: accumulator exceeds 64 bits");
        }
        return acc + term;
    }

    Residue reduce(std::uint64_t value) {
        ledger_.merge(cost_of_reduction(value, f_.modulus(), spec_));
        return f_.reduce(value);
    }

    // Modular product used while expanding seed powers: a full multiply
    // followed by one reduction pass, charged even when the product is
    // already below q.
    Residue modular_product(Residue a, Residue b) {
        return reduce(product_term(a, b));
    }

private:
    const PrimeField& f_;
    const CostModelSpec& spec_;
    CostLedger ledger_;
};

} // namespace

MeasuredKey measured_key_agreement(const SchemeInstance& instance, NodeId i, NodeId j,
                                   const CostModelSpec& spec) {
    if (i == j) {
        throw std::invalid_argument("measured_key_agreement: a node needs no key with itself");
    }
    if (i < 1 || i > instance.params.n || j < 1 || j > instance.params.n) {
        throw std::out_of_range("measured_key_agreement: node id outside 1..n");
    }
    const PrimeField& f = instance.params.field;
    const std::size_t lambda = instance.params.lambda;
    Meter meter(f, spec);

    // Column acquisition. Vandermonde nodes receive the seed s^j and expand
    // the remaining lambda-1 powers; adjacency columns follow from neighbor
    // knowledge and random_matrix columns arrive whole in plaintext, so
    // neither costs any arithmetic.
    std::vector<Residue> column;
    if (instance.kind == SchemeKind::vandermonde) {
        const Residue seed = instance.materials[j - 1].public_seed.value();
        column.resize(lambda + 1);
        column[0] = 1;
        column[1] = seed;
        for (std::size_t r = 2; r <= lambda; ++r) {
            column[r] = meter.modular_product(column[r - 1], seed);
        }
    } else {
        column = acquire_public_column(instance, j);
    }

    // Dot product with end-only reduction, mirroring pairwise_key.
    const auto& row = instance.materials[i - 1].private_row;
    std::uint64_t acc = meter.product_term(row[0], column[0]);
    for (std::size_t r = 1; r <= lambda; ++r) {
        acc = meter.accumulate(acc, meter.product_term(row[r], column[r]));
    }
    const Residue key = meter.reduce(acc);
    return MeasuredKey{key, meter.ledger()};
}

} // namespace blomkit
