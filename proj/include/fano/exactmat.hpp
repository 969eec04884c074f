#pragma once
// Exact linear algebra over Z and Q: Hermite/Smith normal forms, integer
// kernels, solving inside row spaces, unimodular inverses.  Everything is
// arbitrary precision (GMP); no floating point on any path.

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano::exactmat {

using Int = mpz_class;
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

struct NotUnimodular : std::runtime_error {
    NotUnimodular() : std::runtime_error("matrix is not unimodular (det != +-1)") {}
};

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const;   // lexicographic; for ordered sets

    std::vector<Int> apply(const std::vector<Int>& v) const;  // M v
    bool is_identity() const;
    std::string str() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMatrix H;  // row Hermite form: positive pivots, entries above reduced into [0, pivot)
    IntMatrix U;  // unimodular, U * M = H
    int rank = 0;
};

struct SnfResult {
    IntMatrix S;  // diagonal, nonnegative, d1 | d2 | ...
    IntMatrix U;  // unimodular
    IntMatrix V;  // unimodular, U * M * V = S
};

HnfResult hermite_normal_form(const IntMatrix& M);
SnfResult smith_normal_form(const IntMatrix& M);

// Z-basis of {x : M x = 0}; empty when the kernel is trivial.  Saturated by
// construction (rows of the HNF transformation for the zero rows).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M);

int rank(const IntMatrix& M);
Int det(const IntMatrix& M);  // Bareiss, exact; M square

// Integer inverse of a unimodular matrix; throws NotUnimodular otherwise.
IntMatrix unimodular_inverse(const IntMatrix& M);

// Solve K x = b where b lies in the column space of K and the solution is
// integral (both are asserted); used to express a vector in a lattice basis.
std::vector<Int> solve_in_column_space(const IntMatrix& K, const std::vector<Int>& b);

}  // namespace fano::exactmat
