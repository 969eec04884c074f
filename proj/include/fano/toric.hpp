#pragma once
// Cox-presentation auditing: induced Picard matrices from coordinate
// permutations (row convention: row i expresses the class of the permuted
// i-th basis coordinate in the chosen Picard basis) and irrelevant-ideal
// preservation.

#include <stdexcept>
#include <string>
#include <vector>

#include "fano/exactmat.hpp"

namespace fano::toric {

using exactmat::Int;
using exactmat::IntMatrix;

struct Incompatible : std::runtime_error {
    int coordinate;
    explicit Incompatible(int j, const std::string& name)
        : std::runtime_error("permutation is not grading-compatible at coordinate " + name),
          coordinate(j) {}
};

struct CoxPresentation {
    std::vector<std::string> coordinates;
    IntMatrix grading;                         // rho x n, classes are columns
    std::vector<int> picard_basis;             // coordinate indices; columns unimodular
    std::vector<std::vector<int>> irrelevant_monomials;  // squarefree, as index sets

    CoxPresentation(std::vector<std::string> coords, IntMatrix grading,
                    std::vector<int> basis, std::vector<std::vector<int>> irrelevant);
};

// perm[j] = image coordinate of j under the rule D_{x_j} -> D_{x_{perm[j]}};
// composition is fixed by M_{sigma then tau} = M_sigma * M_tau
IntMatrix induced_picard_matrix(const CoxPresentation& cox, const std::vector<int>& perm);

bool preserves_irrelevant_ideal(const CoxPresentation& cox, const std::vector<int>& perm);

}  // namespace fano::toric
