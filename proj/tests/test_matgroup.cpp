#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano/matgroup.hpp"

using namespace fano::matgroup;
using fano::exactmat::Int;
using fano::exactmat::IntMatrix;

namespace {

IntMatrix mk(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> r;
    for (auto& row : rows) r.emplace_back(row.begin(), row.end());
    return IntMatrix::from_rows(r);
}

IntMatrix perm3(int a, int b, int c) {  // images of 0,1,2
    IntMatrix m(3, 3);
    m.at(a, 0) = 1;
    m.at(b, 1) = 1;
    m.at(c, 2) = 1;
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> pick(0, n - 1), val(-1, 1);
    IntMatrix m = IntMatrix::identity(n);
    for (int step = 0; step < 4 * n; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int q = val(rng);
        for (int c = 0; c < n; ++c) m.at(i, c) += q * m.at(j, c);
    }
    return m;
}

// the three 5x5 generators of the 5.3 Picard action (column convention)
std::vector<IntMatrix> gens_53() {
    IntMatrix g = mk({{1, 0, 0, 0, 0},
                      {0, 1, 0, 0, 0},
                      {-1, 1, 0, 1, 0},
                      {1, -1, 1, 0, 0},
                      {0, 0, 0, 0, 1}});
    IntMatrix s = mk({{0, 1, 0, 0, 0},
                      {1, 0, 0, 0, 0},
                      {0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 1}});
    IntMatrix t = mk({{0, 0, 1, 1, 0},
                      {1, 0, 0, 0, 0},
                      {1, 0, 0, -1, 0},
                      {-1, 1, 0, 1, 0},
                      {0, 0, 0, 0, 1}});
    return {g, s, t};
}

}  // namespace

TEST_CASE("closure of an involution has order 2") {
    IntMatrix m = mk({{0, 1}, {1, 0}});
    auto grp = MatrixGroup::generate_closure({m});
    CHECK(grp.order() == 2);
}

TEST_CASE("closure of S3 on coordinates has order 6") {
    auto grp = MatrixGroup::generate_closure({perm3(1, 0, 2), perm3(1, 2, 0)});
    CHECK(grp.order() == 6);
    CHECK(identify_structure(grp).kind == StructureTag::S3);
}

TEST_CASE("5.3 generators close to Z2 x S3 of order 12") {
    auto grp = MatrixGroup::generate_closure(gens_53());
    CHECK(grp.order() == 12);
    auto tag = identify_structure(grp);
    CHECK(tag.kind == StructureTag::Z2xS3);
}

TEST_CASE("non-invertible generator rejected, runaway capped") {
    CHECK_THROWS_AS(MatrixGroup::generate_closure({mk({{2, 0}, {0, 1}})}), NotInvertibleOverZ);
    // infinite order: shear
    CHECK_THROWS_AS(MatrixGroup::generate_closure({mk({{1, 1}, {0, 1}})}, 50), CapExceeded);
}

TEST_CASE("identify_structure basics") {
    auto triv = MatrixGroup::generate_closure({IntMatrix::identity(2)});
    CHECK(identify_structure(triv).kind == StructureTag::trivial);

    auto z2 = MatrixGroup::generate_closure({mk({{-1}})});
    CHECK(identify_structure(z2).kind == StructureTag::Z2);

    auto z4 = MatrixGroup::generate_closure({mk({{0, -1}, {1, 0}})});
    CHECK(identify_structure(z4).kind == StructureTag::Z4);

    auto z2z2 = MatrixGroup::generate_closure({mk({{-1, 0}, {0, 1}}), mk({{1, 0}, {0, -1}})});
    CHECK(identify_structure(z2z2).kind == StructureTag::Z2xZ2);

    // S4 as 4x4 permutation matrices
    IntMatrix c4(4, 4);
    c4.at(1, 0) = c4.at(2, 1) = c4.at(3, 2) = c4.at(0, 3) = 1;
    IntMatrix t(4, 4);
    t.at(1, 0) = t.at(0, 1) = t.at(2, 2) = t.at(3, 3) = 1;
    auto s4 = MatrixGroup::generate_closure({c4, t});
    CHECK(s4.order() == 24);
    CHECK(identify_structure(s4).kind == StructureTag::S4);
}

TEST_CASE("subgroup enumeration: trivial, Z2, S3") {
    auto triv = MatrixGroup::generate_closure({IntMatrix::identity(2)});
    CHECK(enumerate_subgroups(triv).size() == 1);

    auto z2 = MatrixGroup::generate_closure({mk({{0, 1}, {1, 0}})});
    CHECK(enumerate_subgroups(z2).size() == 2);

    auto s3 = MatrixGroup::generate_closure({perm3(1, 0, 2), perm3(1, 2, 0)});
    auto subs = enumerate_subgroups(s3);
    CHECK(subs.size() == 6);  // 1 + three Z2 + Z3 + S3
    for (const auto& h : subs) CHECK(s3.order() % h.order() == 0);
}

TEST_CASE("closure is idempotent") {
    auto grp = MatrixGroup::generate_closure(gens_53());
    auto again = MatrixGroup::generate_closure(grp.elements());
    CHECK(grp.same_elements(again));
}

TEST_CASE("property: Lagrange on all subgroups of the 5.3 group") {
    auto grp = MatrixGroup::generate_closure(gens_53());
    for (const auto& h : enumerate_subgroups(grp)) CHECK(grp.order() % h.order() == 0);
}

TEST_CASE("property: identify_structure is conjugation invariant") {
    std::mt19937_64 rng(99);
    auto grp = MatrixGroup::generate_closure(gens_53());
    for (int t = 0; t < 10; ++t) {
        IntMatrix P = random_unimodular(rng, 5);
        IntMatrix Pi = fano::exactmat::unimodular_inverse(P);
        std::vector<IntMatrix> conj;
        for (const auto& m : grp.elements()) conj.push_back(P * m * Pi);
        auto grp2 = MatrixGroup::from_closed_set(conj);
        CHECK(identify_structure(grp2) == identify_structure(grp));
    }
}
