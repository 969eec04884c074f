#pragma once
// Coefficient fields: Q, the two quadratic extensions the data needs
// (Q(sqrt2) and Q(omega) with omega^2 + omega + 1 = 0), and prime fields with
// an optional adjoined root of the same minimal polynomials.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fano::poly {

enum class ExtKind { None, Sqrt2, Omega };

struct BadPrime : std::runtime_error {
    explicit BadPrime(const std::string& why) : std::runtime_error("bad prime: " + why) {}
};

// a + b*theta, theta^2 = 2 (Sqrt2) or theta^2 = -1 - theta (Omega); b = 0 when
// the field is plain Q
struct ExactScalar {
    mpq_class a, b;

    ExactScalar() = default;
    ExactScalar(long v) : a(v) {}
    ExactScalar(mpq_class av, mpq_class bv = 0) : a(std::move(av)), b(std::move(bv)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const ExactScalar& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }
    std::string str() const;
};

ExactScalar add(const ExactScalar& x, const ExactScalar& y);
ExactScalar sub(const ExactScalar& x, const ExactScalar& y);
ExactScalar neg(const ExactScalar& x);
ExactScalar mul(ExtKind k, const ExactScalar& x, const ExactScalar& y);
ExactScalar inverse(ExtKind k, const ExactScalar& x);  // throws on zero

struct PrimeField {
    uint64_t p = 0;
    ExtKind ext = ExtKind::None;
    uint64_t root = 0;  // smallest nonnegative root of the minimal polynomial mod p

    static PrimeField plain(uint64_t p);
    // adjoin the smallest nonnegative root of theta^2 = 2 resp.
    // theta^2 + theta + 1 = 0; BadPrime when none exists
    static PrimeField with_root(uint64_t p, ExtKind ext);

    uint64_t add(uint64_t x, uint64_t y) const { return (x + y) % p; }
    uint64_t sub(uint64_t x, uint64_t y) const { return (x + p - y) % p; }
    uint64_t mul(uint64_t x, uint64_t y) const { return (x * y) % p; }
    uint64_t neg(uint64_t x) const { return x ? p - x : 0; }
    uint64_t inv(uint64_t x) const;

    // reduce an exact scalar; BadPrime when p divides a denominator, or the
    // scalar needs a root the field does not carry
    uint64_t reduce(const ExactScalar& s) const;
};

}  // namespace fano::poly
