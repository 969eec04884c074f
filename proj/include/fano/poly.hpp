#pragma once
// Multivariate polynomials: exact coefficients (for the registry data,
// substitution, and parametrized-curve identities) and mod-p coefficients
// (the Groebner engine).  Term order is graded reverse lexicographic with the
// fixed variable order of the context.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fano/field.hpp"

namespace fano::poly {

constexpr int kMaxVars = 12;

struct Monomial {
    std::array<uint8_t, kMaxVars> e{};
    uint16_t deg = 0;

    uint8_t operator[](int i) const { return e[size_t(i)]; }
    void set(int i, uint8_t v) {
        deg = uint16_t(deg - e[size_t(i)] + v);
        e[size_t(i)] = v;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// a >_degrevlex b ?
bool degrevlex_greater(const Monomial& a, const Monomial& b, int nvars);
bool divides(const Monomial& a, const Monomial& b);          // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);     // a / b, assumes divisibility
Monomial mono_lcm(const Monomial& a, const Monomial& b);
std::string mono_str(const Monomial& m, const std::vector<std::string>& names);

// ---------------------------------------------------------------- exact side

struct ExactTerm {
    Monomial m;
    ExactScalar c;
    bool operator==(const ExactTerm& o) const { return m == o.m && c == o.c; }
};

// terms kept sorted in strictly descending degrevlex order, no zero coeffs
struct ExactPoly {
    int nvars = 0;
    ExtKind field = ExtKind::None;
    std::vector<ExactTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ExactTerm& leading() const { return terms.front(); }
};

ExactPoly exact_zero(int nvars, ExtKind k);
ExactPoly exact_from_terms(int nvars, ExtKind k, std::vector<ExactTerm> terms);
ExactPoly exact_add(const ExactPoly& f, const ExactPoly& g);
ExactPoly exact_sub(const ExactPoly& f, const ExactPoly& g);
ExactPoly exact_scale(const ExactPoly& f, const ExactScalar& s);
ExactPoly exact_mul(const ExactPoly& f, const ExactPoly& g);
ExactPoly exact_pow(const ExactPoly& f, int e);
ExactPoly exact_derivative(const ExactPoly& f, int var);
// substitute each variable by a polynomial (all over the same context)
ExactPoly exact_substitute(const ExactPoly& f, const std::vector<ExactPoly>& images);
// leading degrevlex coefficient scaled to 1
ExactPoly exact_normalize(const ExactPoly& f);
// f == lambda * g for a scalar lambda != 0?
bool exact_proportional(const ExactPoly& f, const ExactPoly& g);
std::string exact_str(const ExactPoly& f, const std::vector<std::string>& names);

// ---------------------------------------------------------------- mod-p side

struct ModTerm {
    Monomial m;
    uint64_t c = 0;
    bool operator==(const ModTerm& o) const { return m == o.m && c == o.c; }
};

struct ModPoly {
    int nvars = 0;
    std::vector<ModTerm> terms;  // descending degrevlex, no zero coeffs

    bool is_zero() const { return terms.empty(); }
    bool is_unit() const { return terms.size() == 1 && terms[0].m.deg == 0; }
    const ModTerm& leading() const { return terms.front(); }
};

ModPoly specialize(const ExactPoly& f, const PrimeField& F);
ModPoly mod_add(const PrimeField& F, const ModPoly& f, const ModPoly& g);
ModPoly mod_scale_mono(const PrimeField& F, const ModPoly& f, const Monomial& m, uint64_t c);
ModPoly mod_monic(const PrimeField& F, const ModPoly& f);

// ------------------------------------------------------------------- parsing

// Polynomial grammar: terms joined by +/-; a term is an optional integer
// coefficient and factors which are variable names (optionally ^power),
// `sqrt2`, or `omega`; `*` between factors is optional.  Concatenated factor
// runs are split greedily against the variable list.
ExactPoly parse_poly(const std::string& text, const std::vector<std::string>& variables,
                     ExtKind field);
// scalar-only flavor (matrix entries, point coordinates)
ExactScalar parse_scalar(const std::string& text, ExtKind field);

}  // namespace fano::poly
