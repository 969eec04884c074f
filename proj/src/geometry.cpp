#include "fano/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>

namespace fano::geom {

using poly::ExtKind;
using poly::Monomial;
using poly::ModPoly;

int MultiProjectiveSpace::total_vars() const {
    int n = 0;
    for (int d : factor_dims) n += d + 1;
    return n;
}

int MultiProjectiveSpace::var_index(int factor, int coord) const {
    int n = 0;
    for (int f = 0; f < factor; ++f) n += factor_dims[size_t(f)] + 1;
    return n + coord;
}

std::pair<int, int> MultiProjectiveSpace::var_factor(int flat) const {
    for (int f = 0; f < factors(); ++f) {
        int w = factor_dims[size_t(f)] + 1;
        if (flat < w) return {f, flat};
        flat -= w;
    }
    throw std::runtime_error("variable index out of range");
}

MultiHomogeneousVariety::MultiHomogeneousVariety(MultiProjectiveSpace amb,
                                                 std::vector<ExactPoly> eqs, int codim, bool ci)
    : ambient(std::move(amb)), equations(std::move(eqs)), declared_codim(codim),
      complete_intersection(ci) {
    for (int d : ambient.factor_dims)
        if (d < 1) throw std::runtime_error("projective factor dimension must be >= 1");
    if (ci && int(equations.size()) != codim)
        throw std::runtime_error("complete intersection flag requires codim == equation count");
    for (const auto& f : equations) {
        if (f.is_zero()) throw std::runtime_error("zero equation");
        std::vector<int> deg(size_t(ambient.factors()), -1);
        for (const auto& t : f.terms) {
            std::vector<int> d(size_t(ambient.factors()), 0);
            for (int v = 0; v < f.nvars; ++v)
                if (t.m[v]) d[size_t(ambient.var_factor(v).first)] += t.m[v];
            if (deg[0] < 0) deg = d;
            else if (deg != d)
                throw std::runtime_error("equation is not multihomogeneous");
        }
        multidegrees.push_back(deg);
    }
}

bool MultiHomogeneousVariety::all_multidegrees_positive() const {
    for (const auto& d : multidegrees)
        for (int x : d)
            if (x <= 0) return false;
    return !multidegrees.empty();
}

AmbientMap AmbientMap::inverse(const MultiProjectiveSpace& space) const {
    AmbientMap inv;
    inv.field = field;
    inv.factor_map.assign(factor_map.size(), 0);
    inv.matrices.resize(factor_map.size());
    for (size_t i = 0; i < factor_map.size(); ++i) {
        int src = factor_map[i];
        inv.factor_map[size_t(src)] = int(i);
        // invert the block exactly (Gauss-Jordan over the field)
        const auto& M = matrices[i];
        int n = int(M.size());
        std::vector<std::vector<ExactScalar>> a(M);
        std::vector<std::vector<ExactScalar>> b(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r) {
            b[size_t(r)].assign(size_t(n), ExactScalar(0));
            b[size_t(r)][size_t(r)] = ExactScalar(1);
        }
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (!a[size_t(r)][size_t(c)].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw std::runtime_error("ambient map block is singular");
            std::swap(a[size_t(c)], a[size_t(piv)]);
            std::swap(b[size_t(c)], b[size_t(piv)]);
            ExactScalar s = poly::inverse(field, a[size_t(c)][size_t(c)]);
            for (int j = 0; j < n; ++j) {
                a[size_t(c)][size_t(j)] = poly::mul(field, a[size_t(c)][size_t(j)], s);
                b[size_t(c)][size_t(j)] = poly::mul(field, b[size_t(c)][size_t(j)], s);
            }
            for (int r = 0; r < n; ++r) {
                if (r == c || a[size_t(r)][size_t(c)].is_zero()) continue;
                ExactScalar f = a[size_t(r)][size_t(c)];
                for (int j = 0; j < n; ++j) {
                    a[size_t(r)][size_t(j)] = poly::sub(
                        a[size_t(r)][size_t(j)], poly::mul(field, f, a[size_t(c)][size_t(j)]));
                    b[size_t(r)][size_t(j)] = poly::sub(
                        b[size_t(r)][size_t(j)], poly::mul(field, f, b[size_t(c)][size_t(j)]));
                }
            }
        }
        inv.matrices[size_t(src)] = std::move(b);
    }
    (void)space;
    return inv;
}

ExactPoly apply_substitution(const ExactPoly& f, const AmbientMap& g,
                             const MultiProjectiveSpace& space) {
    int n = space.total_vars();
    // variable (i, j) of the output point is the linear form
    // sum_k M_i[j][k] * u_{factor_map[i], k}
    std::vector<ExactPoly> images;
    images.reserve(size_t(n));
    for (int v = 0; v < n; ++v) {
        auto [i, j] = space.var_factor(v);
        int src = g.factor_map[size_t(i)];
        const auto& row = g.matrices[size_t(i)][size_t(j)];
        std::vector<poly::ExactTerm> terms;
        for (size_t k = 0; k < row.size(); ++k) {
            if (row[k].is_zero()) continue;
            Monomial m;
            m.set(space.var_index(src, int(k)), 1);
            terms.push_back({m, row[k]});
        }
        images.push_back(poly::exact_from_terms(n, f.field, std::move(terms)));
    }
    return poly::exact_substitute(f, images);
}

MultiHomogeneousVariety apply_ambient_map(const MultiHomogeneousVariety& V, const AmbientMap& g) {
    if (int(g.factor_map.size()) != V.ambient.factors()) throw ShapeMismatch();
    for (size_t i = 0; i < g.factor_map.size(); ++i) {
        int src = g.factor_map[i];
        if (V.ambient.factor_dims[i] != V.ambient.factor_dims[size_t(src)]) throw ShapeMismatch();
        if (int(g.matrices[i].size()) != V.ambient.factor_dims[i] + 1) throw ShapeMismatch();
    }
    std::vector<ExactPoly> out;
    for (const auto& f : V.equations)
        out.push_back(poly::exact_normalize(apply_substitution(f, g, V.ambient)));
    return MultiHomogeneousVariety(V.ambient, std::move(out), V.declared_codim,
                                   V.complete_intersection);
}

bool is_invariant(const MultiHomogeneousVariety& V, const AmbientMap& g, uint64_t p) {
    MultiHomogeneousVariety W = apply_ambient_map(V, g);
    // exact route: every transformed generator is proportional to an original
    bool all_matched = true;
    for (const auto& tf : W.equations) {
        bool matched = false;
        for (const auto& f : V.equations)
            if (poly::exact_proportional(tf, f)) {
                matched = true;
                break;
            }
        if (!matched) {
            all_matched = false;
            break;
        }
    }
    if (all_matched) return true;
    if (V.equations.size() == 1) return false;  // hypersurface: scalar test is exact and final
    // GB route mod p
    PrimeField F = V.equations[0].field == ExtKind::None
                       ? PrimeField::plain(p)
                       : PrimeField::with_root(p, V.equations[0].field);
    std::vector<ModPoly> gens;
    for (const auto& f : V.equations) gens.push_back(poly::specialize(f, F));
    auto gb = poly::groebner_basis(F, gens);
    for (const auto& tf : W.equations) {
        ModPoly nf = poly::normal_form(F, poly::specialize(tf, F), gb);
        if (!nf.is_zero()) return false;
    }
    return true;
}

std::string SmoothnessCertificate::overall_str() const {
    switch (overall) {
        case Overall::CertifiedSmoothModP: return "CERTIFIED_SMOOTH_MOD_P";
        case Overall::SingularModP:
            return "SINGULAR_MOD_P(chart=" + std::to_string(singular_chart) +
                   ",p=" + std::to_string(singular_prime) + ")";
        case Overall::Error: return "ERROR(" + error + ")";
    }
    return "?";
}

namespace {

// all affine charts, lexicographic over factor-local coordinate indices
std::vector<std::vector<int>> enumerate_charts(const MultiProjectiveSpace& space) {
    std::vector<std::vector<int>> charts{{}};
    for (int f = 0; f < space.factors(); ++f) {
        std::vector<std::vector<int>> next;
        for (const auto& c : charts)
            for (int i = 0; i <= space.factor_dims[size_t(f)]; ++i) {
                auto c2 = c;
                c2.push_back(i);
                next.push_back(std::move(c2));
            }
        charts = std::move(next);
    }
    return charts;
}

ExactPoly dehomogenize(const ExactPoly& f, const MultiProjectiveSpace& space,
                       const std::vector<int>& chart) {
    // set the chart variable of each factor to 1 (exponents dropped)
    ExactPoly r = f;
    std::vector<poly::ExactTerm> terms;
    for (const auto& t : r.terms) {
        Monomial m = t.m;
        for (int fac = 0; fac < space.factors(); ++fac) m.set(space.var_index(fac, chart[size_t(fac)]), 0);
        terms.push_back({m, t.c});
    }
    return poly::exact_from_terms(f.nvars, f.field, std::move(terms));
}

// determinant of a small matrix of exact polynomials (Laplace expansion)
ExactPoly poly_det(const std::vector<std::vector<ExactPoly>>& M, int nvars, ExtKind k) {
    size_t n = M.size();
    if (n == 0) return poly::exact_from_terms(nvars, k, {{Monomial{}, ExactScalar(1)}});
    if (n == 1) return M[0][0];
    ExactPoly acc = poly::exact_zero(nvars, k);
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<ExactPoly>> minor;
        for (size_t r = 1; r < n; ++r) {
            std::vector<ExactPoly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            minor.push_back(std::move(row));
        }
        ExactPoly term = poly::exact_mul(M[0][j], poly_det(minor, nvars, k));
        acc = (j % 2 == 0) ? poly::exact_add(acc, term) : poly::exact_sub(acc, term);
    }
    return acc;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[size_t(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[size_t(i)];
        for (int j = i + 1; j < k; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

}  // namespace

SmoothnessCertificate smoothness_certificate(const MultiHomogeneousVariety& V,
                                             const std::vector<uint64_t>& primes,
                                             std::chrono::milliseconds chart_budget) {
    SmoothnessCertificate cert;
    cert.primes = primes;
    cert.overall = SmoothnessCertificate::Overall::CertifiedSmoothModP;
    if (!V.complete_intersection) {
        cert.overall = SmoothnessCertificate::Overall::Error;
        cert.error = "certificate requires the complete-intersection flag";
        return cert;
    }
    int c = V.declared_codim;
    auto charts = enumerate_charts(V.ambient);
    ExtKind k = V.equations[0].field;

    poly::GroebnerStats stats;
    for (size_t ci = 0; ci < charts.size(); ++ci) {
        // dehomogenised equations and jacobian of the chart
        std::vector<ExactPoly> deh;
        for (const auto& f : V.equations) deh.push_back(dehomogenize(f, V.ambient, charts[ci]));
        std::vector<int> freevars;
        for (int v = 0; v < V.ambient.total_vars(); ++v) {
            auto [fac, coord] = V.ambient.var_factor(v);
            if (coord != charts[ci][size_t(fac)]) freevars.push_back(v);
        }
        std::vector<std::vector<ExactPoly>> jac;
        for (const auto& f : deh) {
            std::vector<ExactPoly> row;
            for (int v : freevars) row.push_back(poly::exact_derivative(f, v));
            jac.push_back(std::move(row));
        }
        std::vector<ExactPoly> ideal = deh;
        combinations(int(deh.size()), c, [&](const std::vector<int>& rr) {
            combinations(int(freevars.size()), c, [&](const std::vector<int>& cc) {
                std::vector<std::vector<ExactPoly>> sub;
                for (int r : rr) {
                    std::vector<ExactPoly> row;
                    for (int col : cc) row.push_back(jac[size_t(r)][size_t(col)]);
                    sub.push_back(std::move(row));
                }
                ExactPoly d = poly_det(sub, V.equations[0].nvars, k);
                if (!d.is_zero()) ideal.push_back(std::move(d));
            });
        });

        std::vector<ChartVerdict> verdicts;
        for (uint64_t p : primes) {
            PrimeField F;
            try {
                F = k == ExtKind::None ? PrimeField::plain(p) : PrimeField::with_root(p, k);
            } catch (const poly::BadPrime& e) {
                cert.overall = SmoothnessCertificate::Overall::Error;
                cert.error = e.what();
                return cert;
            }
            std::vector<ModPoly> gens;
            bool badp = false;
            try {
                for (const auto& f : ideal) gens.push_back(poly::specialize(f, F));
            } catch (const poly::BadPrime& e) {
                cert.overall = SmoothnessCertificate::Overall::Error;
                cert.error = e.what();
                return cert;
            }
            (void)badp;
            poly::GroebnerOptions opt;
            opt.deadline = std::chrono::steady_clock::now() + chart_budget;
            try {
                bool smooth = poly::contains_one(F, gens, opt, &stats);
                verdicts.push_back(smooth ? ChartVerdict::Smooth : ChartVerdict::Singular);
            } catch (const poly::ChartTimeout&) {
                verdicts.push_back(ChartVerdict::Timeout);
                cert.overall = SmoothnessCertificate::Overall::Error;
                cert.error = "chart " + std::to_string(ci) + " timed out";
            }
        }
        cert.chart_verdicts.push_back(verdicts);
        if (cert.overall == SmoothnessCertificate::Overall::Error) break;
        // primes must agree on the chart; disagreement fails loudly
        bool any_sing = false, any_smooth = false;
        for (auto v : verdicts) {
            any_sing |= v == ChartVerdict::Singular;
            any_smooth |= v == ChartVerdict::Smooth;
        }
        if (any_sing && any_smooth) {
            cert.overall = SmoothnessCertificate::Overall::Error;
            cert.error = "primes disagree on chart " + std::to_string(ci);
            break;
        }
        if (any_sing) {
            cert.overall = SmoothnessCertificate::Overall::SingularModP;
            cert.singular_chart = int(ci);
            for (size_t pi = 0; pi < verdicts.size(); ++pi)
                if (verdicts[pi] == ChartVerdict::Singular) {
                    cert.singular_prime = primes[pi];
                    break;
                }
            break;
        }
    }
    cert.gb_pairs = stats.pairs_processed;
    return cert;
}

bool verify_parametrized_curve(const std::vector<ExactPoly>& equations,
                               const ParametrizedCurve& param,
                               const MultiProjectiveSpace& space) {
    if (int(param.components.size()) != space.factors())
        throw std::runtime_error("parametrization factor count mismatch");
    ExtKind k = equations.empty() ? ExtKind::None : equations[0].field;

    // witness search: coordinate pairs (m*s0, m*s1) with monomial m; the m's
    // nonvanishing sets must cover P^1 (the plain (s0, s1) factor is m = 1)
    auto is_mono_times = [&](const ExactPoly& f, int var) -> std::optional<Monomial> {
        // f == m * s_var for a single monomial m?
        if (f.terms.size() != 1) return std::nullopt;
        const auto& t = f.terms[0];
        if (t.c != ExactScalar(1)) return std::nullopt;
        if (t.m[var] < 1) return std::nullopt;
        Monomial m = t.m;
        m.set(var, uint8_t(m[var] - 1));
        return m;
    };
    bool covered_at_10 = false;  // witness valid at [1:0] (i.e. m has no s1 factor... m(1,0) != 0)
    bool covered_at_01 = false;
    for (const auto& comps : param.components) {
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = 0; j < comps.size(); ++j) {
                if (i == j) continue;
                auto m0 = is_mono_times(comps[i], 0);
                auto m1 = is_mono_times(comps[j], 1);
                if (m0 && m1 && *m0 == *m1) {
                    if ((*m0)[1] == 0) covered_at_10 = true;  // no s1 power
                    if ((*m0)[0] == 0) covered_at_01 = true;  // no s0 power
                }
            }
    }
    if (!(covered_at_10 && covered_at_01)) throw NoIdentityFactor();

    // validate per-factor homogeneity of a common degree
    for (int f = 0; f < space.factors(); ++f) {
        const auto& comps = param.components[size_t(f)];
        if (int(comps.size()) != space.factor_dims[size_t(f)] + 1)
            throw std::runtime_error("parametrization component count mismatch");
        int deg = -1;
        for (const auto& comp : comps) {
            for (const auto& t : comp.terms) {
                if (deg < 0) deg = t.m.deg;
                else if (t.m.deg != deg)
                    throw std::runtime_error("parametrization components not homogeneous");
            }
        }
    }

    // substitute and check identical vanishing
    std::vector<ExactPoly> images;
    for (int f = 0; f < space.factors(); ++f)
        for (const auto& comp : param.components[size_t(f)]) images.push_back(comp);
    for (const auto& eq : equations) {
        (void)k;
        ExactPoly r = poly::exact_substitute(eq, images);
        if (!r.is_zero()) return false;
    }
    return true;
}

bool point_on(const ExactPoly& equation, const ProjectivePoint& pt,
              const MultiProjectiveSpace& space, ExtKind field) {
    ExactScalar acc(0);
    for (const auto& t : equation.terms) {
        ExactScalar v = t.c;
        for (int var = 0; var < equation.nvars; ++var) {
            int e = t.m[var];
            if (!e) continue;
            auto [f, c] = space.var_factor(var);
            for (int rep = 0; rep < e; ++rep)
                v = poly::mul(field, v, pt.coords[size_t(f)][size_t(c)]);
        }
        acc = poly::add(acc, v);
    }
    return acc.is_zero();
}

ProjectivePoint apply_to_point(const AmbientMap& g, const ProjectivePoint& pt) {
    ProjectivePoint out;
    out.coords.resize(pt.coords.size());
    for (size_t i = 0; i < g.factor_map.size(); ++i) {
        const auto& src = pt.coords[size_t(g.factor_map[i])];
        const auto& M = g.matrices[i];
        std::vector<ExactScalar> v(M.size(), ExactScalar(0));
        for (size_t r = 0; r < M.size(); ++r)
            for (size_t c = 0; c < src.size(); ++c)
                v[r] = poly::add(v[r], poly::mul(g.field, M[r][c], src[c]));
        out.coords[i] = std::move(v);
    }
    return out;
}

bool points_projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, ExtKind field) {
    if (a.coords.size() != b.coords.size()) return false;
    for (size_t f = 0; f < a.coords.size(); ++f) {
        const auto& u = a.coords[f];
        const auto& v = b.coords[f];
        if (u.size() != v.size()) return false;
        // find a scaling u = lambda v
        ExactScalar lambda;
        bool have = false;
        for (size_t i = 0; i < u.size(); ++i) {
            if (v[i].is_zero()) {
                if (!u[i].is_zero()) return false;
                continue;
            }
            ExactScalar l = poly::mul(field, u[i], poly::inverse(field, v[i]));
            if (!have) {
                lambda = l;
                have = true;
            } else if (l != lambda) {
                return false;
            }
        }
        if (!have) return false;  // zero vector is not a projective point
        if (lambda.is_zero()) return false;
    }
    return true;
}

}  // namespace fano::geom
