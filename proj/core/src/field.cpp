#include "blomkit/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace blomkit {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::uint64_t> largest_prime_leq(std::uint64_t bound) {
    for (std::uint64_t p = bound; p >= 2; --p) {
        if (is_prime(p)) return p;
        if (p == 2) break;
    }
    return std::nullopt;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (q <= 2) {
        throw std::invalid_argument("PrimeField: modulus must exceed 2, got " +
                                    std::to_string(q));
    }
    if (q > (std::uint64_t{1} << 31)) {
        throw std::invalid_argument("PrimeField: modulus exceeds desk-scale bound 2^31");
    }
    if (!is_prime(q)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(q) +
                                    " is not prime");
    }
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const {
    Residue result = 1;
    Residue acc = base % q_;
    while (exp > 0) {
        if (exp & 1) result = mul(result, acc);
        acc = mul(acc, acc);
        exp >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a == 0) throw std::domain_error("PrimeField: zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q_);
    std::int64_t new_r = static_cast<std::int64_t>(a % q_);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(q_);
    return static_cast<Residue>(t);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

} // namespace

Residue find_primitive_element(const PrimeField& f) {
    const std::uint64_t group_order = f.modulus() - 1;
    const auto factors = prime_factors(group_order);
    for (Residue g = 2; g < f.modulus(); ++g) {
        bool primitive = true;
        for (std::uint64_t p : factors) {
            if (f.pow(g, group_order / p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    // Unreachable for prime q: the multiplicative group is cyclic.
    throw std::logic_error("find_primitive_element: no generator found");
}

} // namespace blomkit
