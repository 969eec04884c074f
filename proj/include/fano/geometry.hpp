#pragma once
// Multiprojective varieties: multihomogeneity validation, automorphism
// application, invariance testing, Jacobian-criterion smoothness certificates
// mod p, and exact parametrized-curve verification.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "fano/groebner.hpp"
#include "fano/poly.hpp"

namespace fano::geom {

using poly::ExactPoly;
using poly::ExactScalar;
using poly::ExtKind;
using poly::PrimeField;

struct ShapeMismatch : std::runtime_error {
    ShapeMismatch() : std::runtime_error("ambient map does not match the variety's ambient") {}
};
struct NoIdentityFactor : std::runtime_error {
    NoIdentityFactor()
        : std::runtime_error(
              "parametrization carries no closed-immersion witness; check inapplicable") {}
};

struct MultiProjectiveSpace {
    std::vector<int> factor_dims;  // projective dimensions, all >= 1

    int factors() const { return int(factor_dims.size()); }
    int total_vars() const;
    int var_index(int factor, int coord) const;  // flat index
    std::pair<int, int> var_factor(int flat) const;
};

struct MultiHomogeneousVariety {
    MultiProjectiveSpace ambient;
    std::vector<ExactPoly> equations;
    std::vector<std::vector<int>> multidegrees;  // computed on construction
    int declared_codim = 0;
    bool complete_intersection = false;

    // validates multihomogeneity (throws) and fills multidegrees
    MultiHomogeneousVariety(MultiProjectiveSpace amb, std::vector<ExactPoly> eqs,
                            int codim, bool ci);
    // all equations have strictly positive multidegree in every factor slot
    bool all_multidegrees_positive() const;
};

struct AmbientMap {
    // output factor i takes its coordinates from input factor factor_map[i]
    std::vector<int> factor_map;
    // per output factor: rows = output coordinates as linear forms in the
    // source factor's coordinates
    std::vector<std::vector<std::vector<ExactScalar>>> matrices;
    ExtKind field = ExtKind::None;

    AmbientMap inverse(const MultiProjectiveSpace& space) const;
};

// substitute g into every equation, renormalize leading coefficients to 1
MultiHomogeneousVariety apply_ambient_map(const MultiHomogeneousVariety& V, const AmbientMap& g);
ExactPoly apply_substitution(const ExactPoly& f, const AmbientMap& g,
                             const MultiProjectiveSpace& space);

// ideal invariance: exact scalar matching against the generator set first,
// else every transformed generator reduces to zero mod the GB of the original
// ideal over F_p
bool is_invariant(const MultiHomogeneousVariety& V, const AmbientMap& g, uint64_t p);

enum class ChartVerdict { Smooth, Singular, Timeout };

struct SmoothnessCertificate {
    std::string subject;
    std::vector<uint64_t> primes;
    // chart-major, prime-minor; charts in lexicographic order over
    // factor-local coordinate indices
    std::vector<std::vector<ChartVerdict>> chart_verdicts;
    enum class Overall { CertifiedSmoothModP, SingularModP, Error } overall;
    int singular_chart = -1;
    uint64_t singular_prime = 0;
    std::string error;
    uint64_t gb_pairs = 0;  // deterministic work counter

    bool certified() const { return overall == Overall::CertifiedSmoothModP; }
    std::string overall_str() const;
};

// complete-intersection Jacobian certificate over each prime; primes must
// agree chart by chart (disagreement is an Error, never a vote)
SmoothnessCertificate smoothness_certificate(const MultiHomogeneousVariety& V,
                                             const std::vector<uint64_t>& primes,
                                             std::chrono::milliseconds chart_budget =
                                                 std::chrono::milliseconds(30000));

struct ParametrizedCurve {
    // per ambient factor, dim+1 components, homogeneous of a common degree in
    // the two parameters (s0, s1)
    std::vector<std::vector<ExactPoly>> components;  // polynomials in 2 vars
};

// exact check that every equation vanishes identically under the substitution;
// requires a closed-immersion witness: a factor whose components are exactly
// (s0, s1), or more generally coordinate pairs (m*s0, m*s1) for monomials m
// whose nonvanishing loci cover P^1
bool verify_parametrized_curve(const std::vector<ExactPoly>& equations,
                               const ParametrizedCurve& param,
                               const MultiProjectiveSpace& space);

// ---------------------------------------------------------------- points

struct ProjectivePoint {
    std::vector<std::vector<ExactScalar>> coords;  // per factor
};

bool point_on(const ExactPoly& equation, const ProjectivePoint& pt,
              const MultiProjectiveSpace& space, ExtKind field);
ProjectivePoint apply_to_point(const AmbientMap& g, const ProjectivePoint& pt);
bool points_projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, ExtKind field);

}  // namespace fano::geom
