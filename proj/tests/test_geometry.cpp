#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/geometry.hpp"

using namespace fano::geom;
using fano::poly::ExactPoly;
using fano::poly::ExactScalar;
using fano::poly::ExtKind;
using fano::poly::parse_poly;

namespace {

std::vector<std::string> varnames(const MultiProjectiveSpace& sp, const std::string& letters) {
    std::vector<std::string> v;
    for (int f = 0; f < sp.factors(); ++f)
        for (int i = 0; i <= sp.factor_dims[size_t(f)]; ++i)
            v.push_back(letters.substr(size_t(f), 1) + std::to_string(i));
    return v;
}

AmbientMap identity_map(const MultiProjectiveSpace& sp, ExtKind k = ExtKind::None) {
    AmbientMap g;
    g.field = k;
    for (int f = 0; f < sp.factors(); ++f) {
        g.factor_map.push_back(f);
        int n = sp.factor_dims[size_t(f)] + 1;
        std::vector<std::vector<ExactScalar>> m(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            m[size_t(i)].assign(size_t(n), ExactScalar(0));
            m[size_t(i)][size_t(i)] = ExactScalar(1);
        }
        g.matrices.push_back(std::move(m));
    }
    return g;
}

AmbientMap swap_map(const MultiProjectiveSpace& sp, int a, int b) {
    AmbientMap g = identity_map(sp);
    std::swap(g.factor_map[size_t(a)], g.factor_map[size_t(b)]);
    return g;
}

const std::vector<uint64_t> PRIMES{10007, 10009, 10037};

}  // namespace

TEST_CASE("multihomogeneity validation and multidegrees") {
    MultiProjectiveSpace sp{{2, 2}};
    auto vars = varnames(sp, "xy");
    auto W = parse_poly("x0*y0+x1*y1+x2*y2", vars, ExtKind::None);
    MultiHomogeneousVariety V(sp, {W}, 1, true);
    CHECK(V.multidegrees == std::vector<std::vector<int>>{{1, 1}});
    CHECK(V.all_multidegrees_positive());

    // corrupt one term: off-degree term must be rejected
    auto bad = parse_poly("x0*y0+x1*y1+x2*x2", vars, ExtKind::None);
    CHECK_THROWS(MultiHomogeneousVariety(sp, {bad}, 1, true));
}

TEST_CASE("apply_ambient_map bookkeeping") {
    MultiProjectiveSpace sp{{2, 2}};
    auto vars = varnames(sp, "xy");
    auto W = parse_poly("x0*y0+x1*y1+x2*y2", vars, ExtKind::None);
    MultiHomogeneousVariety V(sp, {W}, 1, true);

    // the (1,1) divisor is invariant under the factor swap
    auto Vs = apply_ambient_map(V, swap_map(sp, 0, 1));
    CHECK(fano::poly::exact_proportional(Vs.equations[0], V.equations[0]));

    // identity fixes x0
    auto x0 = parse_poly("x0", vars, ExtKind::None);
    MultiHomogeneousVariety Vx(sp, {x0}, 1, true);
    CHECK(apply_ambient_map(Vx, identity_map(sp)).equations[0].terms == x0.terms);

    // monomial bookkeeping: x0^2 y0 under the swap becomes x0 y0^2
    auto f = parse_poly("x0^2*y0", vars, ExtKind::None);
    MultiHomogeneousVariety Vf(sp, {f}, 1, true);
    auto g = apply_ambient_map(Vf, swap_map(sp, 0, 1));
    auto expect = parse_poly("x0*y0^2", vars, ExtKind::None);
    CHECK(g.equations[0].terms == expect.terms);
}

TEST_CASE("is_invariant examples") {
    MultiProjectiveSpace sp{{2, 2}};
    auto vars = varnames(sp, "xy");
    auto W = parse_poly("x0*y0+x1*y1+x2*y2", vars, ExtKind::None);
    MultiHomogeneousVariety V(sp, {W}, 1, true);
    CHECK(is_invariant(V, swap_map(sp, 0, 1), 10007));

    MultiProjectiveSpace p11{{1, 1}};
    auto vars2 = varnames(p11, "xy");
    MultiHomogeneousVariety D(p11, {parse_poly("x0*y0", vars2, ExtKind::None)}, 1, true);
    CHECK(is_invariant(D, swap_map(p11, 0, 1), 10007));

    auto f = parse_poly("x0^2*y0", vars, ExtKind::None);
    MultiHomogeneousVariety Vf(sp, {f}, 1, true);
    CHECK_FALSE(is_invariant(Vf, swap_map(sp, 0, 1), 10007));
}

TEST_CASE("is_invariant agrees for g and its inverse") {
    // the 3.13 system: needs the GB route for tau_xy
    MultiProjectiveSpace sp{{2, 2, 2}};
    auto vars = varnames(sp, "xyz");
    std::vector<ExactPoly> eqs = {
        parse_poly("x0*y0+x1*y1+x2*y2", vars, ExtKind::None),
        parse_poly("y0*z0+y1*z1+y2*z2", vars, ExtKind::None),
        parse_poly("x0*z1+x1*z0+x1*z2-x2*z1-2*x2*z2", vars, ExtKind::None)};
    MultiHomogeneousVariety X(sp, eqs, 3, true);

    AmbientMap txy;
    txy.field = ExtKind::None;
    txy.factor_map = {1, 0, 2};
    auto row = [](long a, long b, long c) {
        return std::vector<ExactScalar>{ExactScalar(a), ExactScalar(b), ExactScalar(c)};
    };
    txy.matrices = {{row(1, 2, 1), row(2, 0, 0), row(1, 0, 1)},
                    {row(0, 1, 0), row(1, 0, -1), row(0, -1, 2)},
                    {row(1, 0, 0), row(0, 1, 0), row(0, 0, -1)}};
    CHECK(is_invariant(X, txy, 10007));
    CHECK(is_invariant(X, txy.inverse(sp), 10007));

    AmbientMap txz;
    txz.field = ExtKind::None;
    txz.factor_map = {2, 1, 0};
    txz.matrices = {{row(1, 0, 0), row(0, 1, 0), row(0, 0, -1)},
                    {row(1, 0, 0), row(0, 1, 0), row(0, 0, -1)},
                    {row(1, 0, 0), row(0, 1, 0), row(0, 0, -1)}};
    CHECK(is_invariant(X, txz, 10007));
    CHECK(is_invariant(X, txz.inverse(sp), 10007));
}

TEST_CASE("apply g then g^{-1} returns the equations up to scalar") {
    MultiProjectiveSpace sp{{2, 2, 2}};
    auto vars = varnames(sp, "xyz");
    auto f = parse_poly("x0*y0+2*x1*y1+x2*y2", vars, ExtKind::None);
    MultiHomogeneousVariety V(sp, {f}, 1, true);
    AmbientMap g;
    g.field = ExtKind::None;
    g.factor_map = {1, 2, 0};
    auto row = [](long a, long b, long c) {
        return std::vector<ExactScalar>{ExactScalar(a), ExactScalar(b), ExactScalar(c)};
    };
    g.matrices = {{row(1, 1, 0), row(0, 1, 0), row(0, 0, 1)},
                  {row(1, 0, 0), row(0, 2, 0), row(0, 1, 1)},
                  {row(0, 1, 0), row(1, 0, 0), row(0, 0, 3)}};
    auto once = apply_ambient_map(V, g);
    auto back = apply_ambient_map(once, g.inverse(sp));
    CHECK(fano::poly::exact_proportional(back.equations[0], V.equations[0]));
}

TEST_CASE("smoothness certificates") {
    // smooth quadric in P4 (the 3.19 model)
    MultiProjectiveSpace p4{{4}};
    auto vars = varnames(p4, "x");
    MultiHomogeneousVariety Q(p4, {parse_poly("x0*x1+x2^2+x3^2+x4^2", vars, ExtKind::None)}, 1, true);
    auto cert = smoothness_certificate(Q, PRIMES);
    CHECK(cert.certified());
    CHECK(cert.chart_verdicts.size() == 5);

    // nodal conic x0 x1 in P2: singular at [0:0:1] (chart 2)
    MultiProjectiveSpace p2{{2}};
    auto vars2 = varnames(p2, "x");
    MultiHomogeneousVariety N(p2, {parse_poly("x0*x1", vars2, ExtKind::None)}, 1, true);
    auto cn = smoothness_certificate(N, PRIMES);
    CHECK(cn.overall == SmoothnessCertificate::Overall::SingularModP);
    CHECK(cn.singular_chart == 2);

    // smooth plane conic
    MultiHomogeneousVariety C(p2, {parse_poly("x0^2+x1^2+x2^2", vars2, ExtKind::None)}, 1, true);
    CHECK(smoothness_certificate(C, PRIMES).certified());
}

TEST_CASE("prime disagreement fails loudly") {
    // coefficient 10007 kills one prime only: smooth mod 10009, singular mod 10007
    MultiProjectiveSpace p2{{2}};
    auto vars = varnames(p2, "x");
    MultiHomogeneousVariety V(
        p2, {parse_poly("x0^2+x1^2+10007*x2^2", vars, ExtKind::None)}, 1, true);
    auto cert = smoothness_certificate(V, {10007, 10009});
    CHECK(cert.overall == SmoothnessCertificate::Overall::Error);
}

TEST_CASE("parametrized curves") {
    MultiProjectiveSpace sp{{1, 1, 1}};
    auto vars = varnames(sp, "xyz");
    std::vector<std::string> svars{"s0", "s1"};
    auto c = [&](const std::string& t) { return parse_poly(t, svars, ExtKind::None); };

    // 4.3 curve
    ParametrizedCurve param{{{c("s0"), c("s1")}, {c("s0"), c("s1")}, {c("s0^2"), c("s1^2")}}};
    std::vector<ExactPoly> eqs = {parse_poly("x0*y1-x1*y0", vars, ExtKind::None),
                                  parse_poly("z0*x1*y1-z1*x0*y0", vars, ExtKind::None)};
    CHECK(verify_parametrized_curve(eqs, param, sp));

    // diagonal in P1 x P1
    MultiProjectiveSpace p11{{1, 1}};
    auto v2 = varnames(p11, "xy");
    ParametrizedCurve diag{{{c("s0"), c("s1")}, {c("s0"), c("s1")}}};
    CHECK(verify_parametrized_curve({parse_poly("x0*y1-x1*y0", v2, ExtKind::None)}, diag, p11));
    CHECK_FALSE(verify_parametrized_curve({parse_poly("x0*y0", v2, ExtKind::None)}, diag, p11));

    // no immersion witness: both factors quadratic
    ParametrizedCurve bad{{{c("s0^2"), c("s1^2")}, {c("s0^2"), c("s1^2")}}};
    CHECK_THROWS_AS(
        verify_parametrized_curve({parse_poly("x0*y1-x1*y0", v2, ExtKind::None)}, bad, p11),
        NoIdentityFactor);

    // generalized witness: the moment-curve pairs (x0,x1) = u^3(u,v) and
    // (x3,x4) = v^3(u,v) cover P^1 → the 2.21 membership check runs
    MultiProjectiveSpace p4{{4}};
    auto v4 = varnames(p4, "x");
    ParametrizedCurve quartic{
        {{c("s0^4"), c("s0^3*s1"), c("s0^2*s1^2"), c("s0*s1^3"), c("s1^4")}}};
    CHECK(verify_parametrized_curve(
        {parse_poly("x1*x3-4*x0*x4+3*x2^2", v4, ExtKind::None)}, quartic, p4));
    CHECK_FALSE(verify_parametrized_curve(
        {parse_poly("x0*x4-2*x2^2", v4, ExtKind::None)}, quartic, p4));
}

TEST_CASE("points: evaluation, mapping, projective equality over Q(omega)") {
    MultiProjectiveSpace p4{{4}};
    auto vars = varnames(p4, "x");
    auto C = parse_poly("x2^2+x3^2+x4^2", vars, ExtKind::Omega);
    auto om = [](long a, long b) { return ExactScalar{a, b}; };
    ProjectivePoint p1{{{om(0, 0), om(0, 0), om(1, 0), om(0, 1), om(-1, -1)}}};
    CHECK(point_on(C, p1, p4, ExtKind::Omega));

    // scalar multiples are the same projective point
    ProjectivePoint p1b{{{om(0, 0), om(0, 0), om(0, 2), om(-2, -2), om(2, 0)}}};  // 2*omega*p1
    CHECK(points_projectively_equal(p1, p1b, ExtKind::Omega));
    ProjectivePoint p2{{{om(0, 0), om(0, 0), om(1, 0), om(-1, -1), om(0, 1)}}};
    CHECK_FALSE(points_projectively_equal(p1, p2, ExtKind::Omega));
}
