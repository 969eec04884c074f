#pragma once
// Finite matrix groups over Z: closure from generators, subgroup enumeration,
// and abstract-structure identification for the orders that occur here
// (divisors of 24).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fano/exactmat.hpp"

namespace fano::matgroup {

using exactmat::IntMatrix;

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(size_t cap)
        : std::runtime_error("group closure exceeded cap " + std::to_string(cap)) {}
};
struct NotInvertibleOverZ : std::runtime_error {
    NotInvertibleOverZ() : std::runtime_error("generator has det outside {+1,-1}") {}
};

struct StructureTag {
    enum Kind {
        trivial, Z2, Z3, Z2xZ2, Z4, S3, Z6, Z2xZ2xZ2, D4, Q8, A4, Dic3, Z2xS3, S4, other
    } kind = trivial;
    size_t order = 1;  // meaningful for every kind; the payload for `other`

    std::string name() const;
    bool operator==(const StructureTag& o) const { return kind == o.kind && order == o.order; }
    bool operator!=(const StructureTag& o) const { return !(*this == o); }
};

StructureTag tag_from_name(const std::string& name);  // "Z2", "S3", "Z2xS3", ...

class MatrixGroup {
  public:
    // full multiplicative closure of the generators (identity included)
    static MatrixGroup generate_closure(const std::vector<IntMatrix>& generators,
                                        size_t cap = 10000);
    // wrap an already-closed element set (validated)
    static MatrixGroup from_closed_set(std::vector<IntMatrix> elements);

    int rank() const { return rank_; }
    size_t order() const { return elements_.size(); }
    const std::vector<IntMatrix>& elements() const { return elements_; }
    const std::vector<size_t>& generator_indices() const { return generator_indices_; }

    bool contains(const IntMatrix& m) const;
    bool same_elements(const MatrixGroup& o) const;
    bool is_abelian() const;
    size_t element_order(const IntMatrix& m) const;
    size_t center_order() const;

  private:
    int rank_ = 0;
    std::vector<IntMatrix> elements_;          // sorted, deduplicated
    std::vector<size_t> generator_indices_;    // positions of the input generators
    void validate_closed() const;
};

StructureTag identify_structure(const MatrixGroup& g);

// every subgroup, each exactly once (as an element set); closes singletons and
// pairs, plus the whole group (covers the non-2-generated edge cases)
std::vector<MatrixGroup> enumerate_subgroups(const MatrixGroup& g);

}  // namespace fano::matgroup
