#include "fano/field.hpp"

#include <sstream>

namespace fano::poly {

std::string ExactScalar::str() const {
    std::ostringstream os;
    if (b == 0) {
        os << a.get_str();
        return os.str();
    }
    bool wrote = false;
    if (a != 0) {
        os << a.get_str();
        wrote = true;
    }
    if (b == 1) os << (wrote ? "+" : "") << "theta";
    else if (b == -1) os << "-theta";
    else {
        if (wrote && b > 0) os << "+";
        os << b.get_str() << "*theta";
    }
    return os.str();
}

ExactScalar add(const ExactScalar& x, const ExactScalar& y) { return {x.a + y.a, x.b + y.b}; }
ExactScalar sub(const ExactScalar& x, const ExactScalar& y) { return {x.a - y.a, x.b - y.b}; }
ExactScalar neg(const ExactScalar& x) { return {-x.a, -x.b}; }

ExactScalar mul(ExtKind k, const ExactScalar& x, const ExactScalar& y) {
    // (a + b t)(c + d t) = ac + bd t^2 + (ad + bc) t
    mpq_class ac = x.a * y.a, bd = x.b * y.b, mix = x.a * y.b + x.b * y.a;
    switch (k) {
        case ExtKind::None: return {ac, mix};
        case ExtKind::Sqrt2: return {ac + 2 * bd, mix};
        case ExtKind::Omega: return {ac - bd, mix - bd};  // t^2 = -1 - t
    }
    return {};
}

ExactScalar inverse(ExtKind k, const ExactScalar& x) {
    if (x.is_zero()) throw std::runtime_error("division by zero scalar");
    if (x.b == 0) return {1 / x.a, 0};
    switch (k) {
        case ExtKind::None:
            throw std::runtime_error("nonzero extension part in a plain rational field");
        case ExtKind::Sqrt2: {
            mpq_class n = x.a * x.a - 2 * x.b * x.b;  // nonzero: sqrt2 irrational
            return {x.a / n, -x.b / n};
        }
        case ExtKind::Omega: {
            // conj(a + b w) = a + b w^2 = (a - b) - b w; norm = a^2 - a b + b^2
            mpq_class n = x.a * x.a - x.a * x.b + x.b * x.b;
            return {(x.a - x.b) / n, -x.b / n};
        }
    }
    return {};
}

PrimeField PrimeField::plain(uint64_t p) { return {p, ExtKind::None, 0}; }

PrimeField PrimeField::with_root(uint64_t p, ExtKind ext) {
    if (ext == ExtKind::None) return plain(p);
    for (uint64_t r = 0; r < p; ++r) {
        uint64_t v = ext == ExtKind::Sqrt2 ? (r * r + p - 2 % p) % p : (r * r + r + 1) % p;
        if (v == 0) return {p, ext, r};
    }
    throw BadPrime(ext == ExtKind::Sqrt2
                       ? "2 is not a square mod " + std::to_string(p) + " (need p = +-1 mod 8)"
                       : "t^2+t+1 has no root mod " + std::to_string(p) + " (need p = 1 mod 3)");
}

uint64_t PrimeField::inv(uint64_t x) const {
    // extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = int64_t(p), nr = int64_t(x % p);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw std::runtime_error("not invertible mod p");
    return uint64_t(t < 0 ? t + int64_t(p) : t);
}

uint64_t PrimeField::reduce(const ExactScalar& s) const {
    auto redq = [&](const mpq_class& q) -> uint64_t {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class pz(static_cast<unsigned long>(p));
        mpz_class dm = den % pz;
        if (dm == 0) throw BadPrime("p divides a coefficient denominator");
        mpz_class nm = num % pz;
        if (nm < 0) nm += pz;
        uint64_t n = nm.get_ui();
        uint64_t d = mpz_class(dm < 0 ? dm + pz : dm).get_ui();
        return mul(n, inv(d));
    };
    uint64_t val = redq(s.a);
    if (s.b != 0) {
        if (ext == ExtKind::None) throw BadPrime("extension coefficient over a plain prime field");
        val = add(val, mul(redq(s.b), root));
    }
    return val;
}

}  // namespace fano::poly
