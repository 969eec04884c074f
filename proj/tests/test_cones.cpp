#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/cones.hpp"
#include "fano/matgroup.hpp"

using namespace fano::cones;
using fano::exactmat::Int;
using fano::matgroup::identify_structure;
using fano::matgroup::StructureTag;

namespace {

std::vector<Int> iv(const std::vector<long>& v) { return {v.begin(), v.end()}; }
RatVector rv(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("membership examples") {
    RationalCone c(2, {iv({1, 0}), iv({0, 1})});
    CHECK(contains(c, rv({1, 1})));
    CHECK_FALSE(contains(c, rv({-1, 0})));

    RationalCone c2(2, {iv({1, 0}), iv({1, 2})});
    CHECK(contains(c2, rv({1, 1})));  // (1,1) = (1,0)/2 + (1,2)/2
    CHECK_FALSE(contains(c2, rv({0, 1})));
}

TEST_CASE("extremal generators") {
    RationalCone c(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})});
    auto ext = extremal_generators(c);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == iv({1, 0}));
    CHECK(ext[1] == iv({0, 1}));

    // 3.10 nef rays: all three extremal
    RationalCone c310(3, {iv({1, 0, 0}), iv({1, -1, 0}), iv({1, 0, -1})});
    CHECK(extremal_generators(c310).size() == 3);

    RationalCone single(2, {iv({2, 1})});
    CHECK(extremal_generators(single).size() == 1);
}

TEST_CASE("extremal_generators is idempotent") {
    RationalCone c(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0}), iv({0, 0, 1})});
    auto e1 = extremal_generators(c);
    RationalCone c2(3, e1);
    CHECK(extremal_generators(c2) == e1);
}

TEST_CASE("symmetry group of the 2.12 nef data has order 2") {
    auto g = symmetry_group({iv({3, -1}), iv({1, 0})}, iv({4, -1}));
    CHECK(g.order() == 2);
    // the nontrivial element sends H to 3H-E and E to 8H-3E
    bool found = false;
    for (const auto& m : g.elements())
        if (!m.is_identity()) {
            CHECK(m.at(0, 0) == 3);
            CHECK(m.at(1, 0) == -1);
            CHECK(m.at(0, 1) == 8);
            CHECK(m.at(1, 1) == -3);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("symmetry group of the octant fixing (2,2,2) is S3") {
    auto g = symmetry_group({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, iv({2, 2, 2}));
    CHECK(g.order() == 6);
    CHECK(identify_structure(g).kind == StructureTag::S3);
}

TEST_CASE("fixed vector breaking the swap yields the trivial group") {
    auto g = symmetry_group({iv({1, 0}), iv({0, 1})}, iv({1, 2}));
    CHECK(g.order() == 1);
}

TEST_CASE("rays must span") {
    CHECK_THROWS_AS(symmetry_group({iv({1, 0}), iv({2, 0})}, iv({1, 0})), RaysDoNotSpan);
}
