#pragma once
// Rational polyhedral cones: exact membership (Fourier-Motzkin), extremal-ray
// extraction, and the group of lattice automorphisms preserving a ray set and
// fixing a given class (the computable stand-in for the Weyl-group bound).

#include <stdexcept>
#include <vector>

#include "fano/exactmat.hpp"
#include "fano/matgroup.hpp"

namespace fano::cones {

using exactmat::Int;
using exactmat::Rat;
using exactmat::RatVector;
using exactmat::IntMatrix;
using matgroup::MatrixGroup;

struct RaysDoNotSpan : std::runtime_error {
    RaysDoNotSpan() : std::runtime_error("rays do not span the ambient space") {}
};

struct RationalCone {
    int ambient_rank = 0;
    std::vector<std::vector<Int>> generators;  // primitive, nonzero (validated)

    RationalCone(int rank, std::vector<std::vector<Int>> gens);
};

// v a nonnegative rational combination of the generators?
bool contains(const RationalCone& cone, const RatVector& v);

// generators v with v not in cone(generators minus v), input order preserved
std::vector<std::vector<Int>> extremal_generators(const RationalCone& cone);

// all M in GL_n(Z) with M(ray set) = ray set and M(fixed) = fixed
MatrixGroup symmetry_group(const std::vector<std::vector<Int>>& rays,
                           const std::vector<Int>& fixed);

}  // namespace fano::cones
