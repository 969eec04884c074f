#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano/groebner.hpp"
#include "fano/poly.hpp"

using namespace fano::poly;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

ModPoly sp(const std::string& s, const std::vector<std::string>& vars, const PrimeField& F) {
    return specialize(parse_poly(s, vars, ExtKind::None), F);
}

std::string gb_str(const std::vector<ModPoly>& gb, const std::vector<std::string>& vars,
                   const PrimeField& F) {
    std::string out;
    for (const auto& g : gb) {
        if (!out.empty()) out += "; ";
        bool first = true;
        for (const auto& t : g.terms) {
            if (!first) out += "+";
            out += std::to_string(t.c) + "*" + mono_str(t.m, vars);
            first = false;
        }
    }
    (void)F;
    return out;
}

Monomial mono(const std::vector<int>& e) {
    Monomial m;
    for (size_t i = 0; i < e.size(); ++i) m.set(int(i), uint8_t(e[i]));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic in the quadratic extensions") {
    // (1 + sqrt2)(1 - sqrt2) = -1
    ExactScalar a{1, 1}, b{1, -1};
    CHECK(mul(ExtKind::Sqrt2, a, b) == ExactScalar{-1, 0});
    // omega^2 + omega + 1 = 0
    ExactScalar w{0, 1};
    ExactScalar w2 = mul(ExtKind::Omega, w, w);
    CHECK(add(add(w2, w), ExactScalar(1)) == ExactScalar(0));
    // inverses
    ExactScalar inv = inverse(ExtKind::Omega, ExactScalar{2, -3});
    CHECK(mul(ExtKind::Omega, inv, ExactScalar{2, -3}) == ExactScalar(1));
}

TEST_CASE("specialize: sqrt2 and omega roots") {
    // 3^2 = 2 mod 7, smallest root
    PrimeField F7s = PrimeField::with_root(7, ExtKind::Sqrt2);
    CHECK(F7s.root == 3);
    // roots of t^2+t+1 mod 7 are {2,4}; omega -> 2
    PrimeField F7w = PrimeField::with_root(7, ExtKind::Omega);
    CHECK(F7w.root == 2);
    // omega needs p = 1 mod 3
    CHECK_THROWS_AS(PrimeField::with_root(5, ExtKind::Omega), BadPrime);
    // sqrt2 needs p = +-1 mod 8
    CHECK_THROWS_AS(PrimeField::with_root(10037, ExtKind::Sqrt2), BadPrime);
    CHECK(PrimeField::with_root(10007, ExtKind::Sqrt2).p == 10007);
    // denominator divisible by p
    PrimeField F5 = PrimeField::plain(5);
    ExactPoly f = parse_poly("x", {"x"}, ExtKind::None);
    f.terms[0].c = ExactScalar{mpq_class(1, 5), 0};
    CHECK_THROWS_AS(specialize(f, F5), BadPrime);
}

TEST_CASE("parser handles implicit products and powers") {
    auto f = parse_poly("x0y1 - x1y0", {"x0", "x1", "y0", "y1"}, ExtKind::None);
    CHECK(f.terms.size() == 2);
    auto g = parse_poly("x0*y1-x1*y0", {"x0", "x1", "y0", "y1"}, ExtKind::None);
    CHECK(f.terms == g.terms);
    auto h = parse_poly("3*z2^2 - 2", {"z2"}, ExtKind::None);
    CHECK(h.terms.size() == 2);
    auto s = parse_poly("x0*y1+x1*y0-sqrt2*x2*y2",
                        {"x0", "x1", "x2", "y0", "y1", "y2"}, ExtKind::Sqrt2);
    CHECK(s.terms.size() == 3);
    CHECK(parse_scalar("-1-omega", ExtKind::Omega) == ExactScalar{-1, -1});
    CHECK(parse_scalar("2+omega", ExtKind::Omega) == ExactScalar{2, 1});
    CHECK_THROWS(parse_poly("x +", {"x"}, ExtKind::None));
    CHECK_THROWS(parse_poly("q", {"x"}, ExtKind::None));
}

TEST_CASE("degrevlex order axioms on random triples") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> e(0, 4);
    int nv = 4;
    for (int t = 0; t < 500; ++t) {
        Monomial a = mono({e(rng), e(rng), e(rng), e(rng)});
        Monomial b = mono({e(rng), e(rng), e(rng), e(rng)});
        Monomial c = mono({e(rng), e(rng), e(rng), e(rng)});
        // totality
        CHECK(((a == b) || degrevlex_greater(a, b, nv) || degrevlex_greater(b, a, nv)));
        // antisymmetry
        CHECK_FALSE((degrevlex_greater(a, b, nv) && degrevlex_greater(b, a, nv)));
        // multiplicativity
        if (degrevlex_greater(a, b, nv))
            CHECK(degrevlex_greater(mono_mul(a, c), mono_mul(b, c), nv));
        // well-founded: 1 is minimal
        if (a.deg > 0) CHECK(degrevlex_greater(a, Monomial{}, nv));
        // transitivity spot check
        if (degrevlex_greater(a, b, nv) && degrevlex_greater(b, c, nv))
            CHECK(degrevlex_greater(a, c, nv));
    }
}

TEST_CASE("groebner basics") {
    PrimeField F7 = PrimeField::plain(7);
    // {x} -> {x}
    auto gb1 = groebner_basis(F7, {sp("x", XY, F7)});
    REQUIRE(gb1.size() == 1);
    CHECK(mono_str(gb1[0].leading().m, XY) == "x");

    // {x, x+1} -> {1}
    auto gb2 = groebner_basis(F7, {sp("x", XY, F7), sp("x+1", XY, F7)});
    REQUIRE(gb2.size() == 1);
    CHECK(gb2[0].is_unit());

    // {x^2+y^2, x*y} over F7 -> {x^2+y^2, x*y, y^3}
    auto gb3 = groebner_basis(F7, {sp("x^2+y^2", XY, F7), sp("x*y", XY, F7)});
    REQUIRE(gb3.size() == 3);
    CHECK(gb_str(gb3, XY, F7) == "1*x^2+1*y^2; 1*x*y; 1*y^3");
}

TEST_CASE("contains_one examples") {
    PrimeField F7 = PrimeField::plain(7);
    CHECK(contains_one(F7, {sp("x", XY, F7), sp("y", XY, F7), sp("x+y+1", XY, F7)}));
    CHECK_FALSE(contains_one(F7, {sp("x*y", XY, F7)}));
    // 7 = 3 mod 4 so x^2+1 is irreducible: proper ideal
    CHECK_FALSE(contains_one(F7, {sp("x^2+1", XY, F7)}));
}

TEST_CASE("self-membership: generators reduce to zero mod their own GB") {
    PrimeField F = PrimeField::plain(10007);
    std::vector<std::vector<std::string>> systems = {
        {"x^2+y^2", "x*y"},
        {"x^2-y", "y^2-x", "x*y-1"},
        {"x+y+z", "x*y+y*z+x*z", "x*y*z-1"},
    };
    for (const auto& sys : systems) {
        std::vector<ModPoly> gens;
        for (const auto& s : sys) gens.push_back(sp(s, XYZ, F));
        auto gb = groebner_basis(F, gens);
        for (const auto& g : gens) CHECK(normal_form(F, g, gb).is_zero());
    }
}

TEST_CASE("contains_one agrees with brute-force emptiness over F5 (3 vars)") {
    PrimeField F5 = PrimeField::plain(5);
    auto value = [&](const ModPoly& f, uint64_t x, uint64_t y, uint64_t z) {
        uint64_t acc = 0;
        for (const auto& t : f.terms) {
            uint64_t v = t.c;
            for (int i = 0; i < t.m[0]; ++i) v = F5.mul(v, x);
            for (int i = 0; i < t.m[1]; ++i) v = F5.mul(v, y);
            for (int i = 0; i < t.m[2]; ++i) v = F5.mul(v, z);
            acc = F5.add(acc, v);
        }
        return acc;
    };
    auto has_common_zero = [&](const std::vector<ModPoly>& gens) {
        for (uint64_t x = 0; x < 5; ++x)
            for (uint64_t y = 0; y < 5; ++y)
                for (uint64_t z = 0; z < 5; ++z) {
                    bool all = true;
                    for (const auto& g : gens)
                        if (value(g, x, y, z) != 0) {
                            all = false;
                            break;
                        }
                    if (all) return true;
                }
        return false;
    };

    // systems designed to split over F5 (so emptiness over F5-bar is seen on
    // F5 points) plus inconsistent ones
    std::vector<std::vector<std::string>> systems = {
        {"x-1", "y-2", "z-3"},
        {"x-1", "x-2"},
        {"x^2-1", "y-x", "z"},
        {"x*y-1", "x-2", "y-3"},       // xy = 6 = 1 mod 5: consistent
        {"x*y-1", "x-2", "y-2"},       // xy = 4 != 1: inconsistent
        {"x^4-1", "y"},                // x^4 = 1 splits over F5
    };
    for (const auto& sys : systems) {
        std::vector<ModPoly> gens;
        for (const auto& s : sys) gens.push_back(sp(s, XYZ, F5));
        bool one = contains_one(F5, gens);
        bool zero_found = has_common_zero(gens);
        if (one) CHECK_FALSE(zero_found);
        else CHECK(zero_found);
    }
}

TEST_CASE("deadline triggers ChartTimeout") {
    PrimeField F = PrimeField::plain(10007);
    std::vector<ModPoly> gens;
    // cyclic-5-like system: hard enough not to finish instantly
    std::vector<std::string> names{"a", "b", "c", "d", "e"};
    auto add = [&](const std::string& s) { gens.push_back(specialize(parse_poly(s, names, ExtKind::None), F)); };
    add("a+b+c+d+e");
    add("a*b+b*c+c*d+d*e+e*a");
    add("a*b*c+b*c*d+c*d*e+d*e*a+e*a*b");
    add("a*b*c*d+b*c*d*e+c*d*e*a+d*e*a*b+e*a*b*c");
    add("a*b*c*d*e-1");
    GroebnerOptions opt;
    opt.deadline = std::chrono::steady_clock::now();  // already expired
    CHECK_THROWS_AS(groebner_basis(F, gens, opt), ChartTimeout);
}
