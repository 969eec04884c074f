#pragma once
// Z[G]-lattices: invariant sublattice, first group cohomology via the full
// pair-constraint cocycle system, permutation-basis verification, and the
// block assembly of blow-up Picard actions.

#include <optional>
#include <stdexcept>
#include <vector>

#include "fano/exactmat.hpp"
#include "fano/matgroup.hpp"

namespace fano::glattice {

using exactmat::Int;
using exactmat::IntMatrix;
using matgroup::MatrixGroup;

struct GLattice {
    // group elements act on column vectors of Z^rank
    GLattice(MatrixGroup group, std::vector<std::string> basis_labels = {});
    int rank() const { return group_.rank(); }
    const MatrixGroup& group() const { return group_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

  private:
    MatrixGroup group_;
    std::vector<std::string> labels_;
};

// saturated Z-basis of the g-invariant vectors (all g simultaneously)
std::vector<std::vector<Int>> invariant_sublattice(const GLattice& L);

// elementary divisors (> 1) of H^1(G, L) = Z^1 / B^1; empty list means H^1 = 0.
// Z^1 is cut out by f(gh) = f(g) + A_g f(h) over all ordered pairs; the
// solver asserts that f(identity) = 0 is forced by the system.
std::vector<Int> first_cohomology(const GLattice& L);

struct NotABasis : std::runtime_error {
    NotABasis() : std::runtime_error("candidate vectors are not a Z-basis") {}
};
struct NotPermuted : std::runtime_error {
    size_t generator_index;
    size_t vector_index;
    NotPermuted(size_t g, size_t v)
        : std::runtime_error("generator " + std::to_string(g) + " does not permute candidate vector " +
                             std::to_string(v)),
          generator_index(g), vector_index(v) {}
};

// on success: for each listed generator matrix, the permutation it induces on
// the candidate set (images[i] = j means candidate i maps to candidate j)
std::vector<std::vector<size_t>> verify_permutation_basis(
    const GLattice& L, const std::vector<IntMatrix>& generators,
    const std::vector<std::vector<Int>>& candidate);

// block matrix: base_action on the pulled-back classes, permutation matrix on
// the k exceptional classes (basis order: base classes..., E_1..E_k);
// exceptional_images[i] = j means E_{i+1} maps to E_{j+1}
IntMatrix blowup_picard_action(const IntMatrix& base_action,
                               const std::vector<size_t>& exceptional_images);

}  // namespace fano::glattice
