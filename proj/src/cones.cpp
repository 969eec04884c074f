#include "fano/cones.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace fano::cones {

RationalCone::RationalCone(int rank, std::vector<std::vector<Int>> gens)
    : ambient_rank(rank), generators(std::move(gens)) {
    for (const auto& g : generators) {
        if (int(g.size()) != rank) throw std::runtime_error("cone generator has wrong dimension");
        Int gc = 0;
        for (const auto& x : g) mpz_gcd(gc.get_mpz_t(), gc.get_mpz_t(), x.get_mpz_t());
        if (gc != 1) throw std::runtime_error("cone generator must be primitive and nonzero");
    }
}

namespace {

// Linear constraint a . x + c >= 0 (or == 0) over Q.
struct Constraint {
    std::vector<Rat> a;
    Rat c;
    bool equality = false;
};

// Exact feasibility of a system in `nv` variables by Gauss elimination on the
// equalities followed by Fourier-Motzkin on the inequalities.
bool feasible(std::vector<Constraint> sys, int nv) {
    // substitute out equalities
    for (bool progress = true; progress;) {
        progress = false;
        for (size_t e = 0; e < sys.size(); ++e) {
            if (!sys[e].equality) continue;
            int pivot = -1;
            for (int j = 0; j < nv; ++j)
                if (sys[e].a[j] != 0) {
                    pivot = j;
                    break;
                }
            if (pivot < 0) {
                if (sys[e].c != 0) return false;
                sys.erase(sys.begin() + long(e));
                progress = true;
                break;
            }
            Constraint eq = sys[e];
            sys.erase(sys.begin() + long(e));
            for (auto& c : sys) {
                if (c.a[pivot] == 0) continue;
                Rat f = c.a[pivot] / eq.a[pivot];
                for (int j = 0; j < nv; ++j) c.a[j] -= f * eq.a[j];
                c.c -= f * eq.c;
            }
            progress = true;
            break;
        }
    }
    // Fourier-Motzkin on the remaining inequalities
    for (int v = 0; v < nv; ++v) {
        std::vector<Constraint> pos, neg, zero;
        for (auto& c : sys) {
            int s = sgn(c.a[v]);
            if (s > 0) pos.push_back(std::move(c));
            else if (s < 0) neg.push_back(std::move(c));
            else zero.push_back(std::move(c));
        }
        sys = std::move(zero);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Constraint c;
                c.a.assign(size_t(nv), Rat(0));
                // p.a[v] > 0, n.a[v] < 0: combine to eliminate v
                Rat fp = -n.a[v];
                Rat fn = p.a[v];
                for (int j = 0; j < nv; ++j) c.a[j] = fp * p.a[j] + fn * n.a[j];
                c.c = fp * p.c + fn * n.c;
                bool allz = std::all_of(c.a.begin(), c.a.end(), [](const Rat& x) { return x == 0; });
                if (allz) {
                    if (c.c < 0) return false;
                } else {
                    sys.push_back(std::move(c));
                }
            }
    }
    for (const auto& c : sys) {
        bool allz = std::all_of(c.a.begin(), c.a.end(), [](const Rat& x) { return x == 0; });
        assert(allz);
        if (c.c < 0) return false;
    }
    return true;
}

}  // namespace

bool contains(const RationalCone& cone, const RatVector& v) {
    if (int(v.size()) != cone.ambient_rank)
        throw std::runtime_error("cone membership: dimension mismatch");
    int k = int(cone.generators.size());
    // lambda >= 0 with  G lambda = v
    std::vector<Constraint> sys;
    for (int i = 0; i < cone.ambient_rank; ++i) {
        Constraint eq;
        eq.equality = true;
        eq.a.assign(size_t(k), Rat(0));
        for (int j = 0; j < k; ++j) eq.a[j] = Rat(cone.generators[j][i]);
        eq.c = -v[i];
        sys.push_back(std::move(eq));
    }
    for (int j = 0; j < k; ++j) {
        Constraint ge;
        ge.a.assign(size_t(k), Rat(0));
        ge.a[j] = 1;
        sys.push_back(std::move(ge));
    }
    return feasible(std::move(sys), k);
}

std::vector<std::vector<Int>> extremal_generators(const RationalCone& cone) {
    std::vector<std::vector<Int>> out;
    for (size_t i = 0; i < cone.generators.size(); ++i) {
        std::vector<std::vector<Int>> rest;
        for (size_t j = 0; j < cone.generators.size(); ++j)
            if (j != i) rest.push_back(cone.generators[j]);
        bool redundant = false;
        if (!rest.empty()) {
            RationalCone sub(cone.ambient_rank, rest);
            RatVector v(cone.generators[i].begin(), cone.generators[i].end());
            redundant = contains(sub, v);
        }
        if (!redundant) out.push_back(cone.generators[i]);
    }
    return out;
}

MatrixGroup symmetry_group(const std::vector<std::vector<Int>>& rays,
                           const std::vector<Int>& fixed) {
    assert(!rays.empty());
    int n = int(rays[0].size());
    int k = int(rays.size());
    bool fz = std::all_of(fixed.begin(), fixed.end(), [](const Int& x) { return x == 0; });
    if (fz) throw std::runtime_error("symmetry_group: fixed vector must be nonzero");

    // spanning subset: first n linearly independent rays
    IntMatrix R(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) R.at(i, j) = rays[j][i];
    std::vector<int> span;
    for (int j = 0; j < k && int(span.size()) < n; ++j) {
        std::vector<int> test = span;
        test.push_back(j);
        IntMatrix sub(n, int(test.size()));
        for (size_t c = 0; c < test.size(); ++c)
            for (int i = 0; i < n; ++i) sub.at(i, int(c)) = rays[test[c]][i];
        if (exactmat::rank(sub) == int(test.size())) span = test;
    }
    if (int(span.size()) != n) throw RaysDoNotSpan();

    IntMatrix Bs(n, n);
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < n; ++i) Bs.at(i, c) = rays[span[c]][i];
    Int dB = exactmat::det(Bs);

    // adjugate of the spanning block, computed once (n <= 5 here)
    IntMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c2 = 0, cc = 0; c2 < n; ++c2) {
                    if (c2 == i) continue;
                    minor.at(rr, cc) = Bs.at(r, c2);
                    ++cc;
                }
                ++rr;
            }
            Int m = (n == 1) ? Int(1) : exactmat::det(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
        }

    std::vector<IntMatrix> found;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // M is determined by its action on the spanning subset:
        // M * Bs = T where T columns are the permuted spanning rays;
        // integrality via M = T adj(Bs) / det(Bs)
        IntMatrix T(n, n);
        for (int c = 0; c < n; ++c)
            for (int i = 0; i < n; ++i) T.at(i, c) = rays[perm[span[c]]][i];
        IntMatrix num = T * adj;
        bool ok = true;
        IntMatrix M(n, n);
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (num.at(i, j) % dB != 0) ok = false;
                else M.at(i, j) = num.at(i, j) / dB;
            }
        if (!ok) continue;
        Int dM = exactmat::det(M);
        if (dM != 1 && dM != -1) continue;
        // consistency on every ray and the fixed vector
        for (int j = 0; j < k && ok; ++j)
            if (M.apply(rays[j]) != rays[perm[j]]) ok = false;
        if (ok && M.apply(fixed) != fixed) ok = false;
        if (ok) found.push_back(std::move(M));
    } while (std::next_permutation(perm.begin(), perm.end()));

    return MatrixGroup::from_closed_set(std::move(found));
}

}  // namespace fano::cones
