#include "fano/glattice.hpp"

#include <cassert>

namespace fano::glattice {

GLattice::GLattice(MatrixGroup group, std::vector<std::string> basis_labels)
    : group_(std::move(group)), labels_(std::move(basis_labels)) {
    // the action map must be a homomorphism: products of elements stay in the
    // element set (this is exactly closedness of the matrix set)
    const auto& els = group_.elements();
    for (const auto& a : els)
        for (const auto& b : els)
            if (!group_.contains(a * b))
                throw std::runtime_error("GLattice: action is not a homomorphism (set not closed)");
}

std::vector<std::vector<Int>> invariant_sublattice(const GLattice& L) {
    const auto& els = L.group().elements();
    int n = L.rank();
    IntMatrix stacked(int(els.size()) * n, n);
    int row = 0;
    for (const auto& g : els) {
        for (int i = 0; i < n; ++i, ++row)
            for (int j = 0; j < n; ++j)
                stacked.at(row, j) = g.at(i, j) - (i == j ? 1 : 0);
    }
    return exactmat::integer_kernel(stacked);
}

std::vector<Int> first_cohomology(const GLattice& L) {
    const auto& els = L.group().elements();
    int n = L.rank();
    int m = int(els.size());

    // index of a product element
    auto index_of = [&](const IntMatrix& x) {
        auto it = std::lower_bound(els.begin(), els.end(), x);
        assert(it != els.end() && *it == x);
        return int(it - els.begin());
    };
    int id_idx = index_of(IntMatrix::identity(n));

    // unknowns: f(g) blocks of size n, for each element g (m*n unknowns)
    // constraints: f(gh) - f(g) - A_g f(h) = 0 for every ordered pair
    IntMatrix C(n * m * m, n * m);
    int row = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int ab = index_of(els[a] * els[b]);
            for (int i = 0; i < n; ++i, ++row) {
                C.at(row, ab * n + i) += 1;
                C.at(row, a * n + i) -= 1;
                for (int j = 0; j < n; ++j) C.at(row, b * n + j) -= els[a].at(i, j);
            }
        }
    }
    auto zbasis = exactmat::integer_kernel(C);

    // f(identity) = 0 must be forced by the system, not assumed
    for (const auto& v : zbasis)
        for (int i = 0; i < n; ++i)
            if (v[id_idx * n + i] != 0)
                throw std::runtime_error("cocycle solver: f(identity) = 0 not forced");

    if (zbasis.empty()) return {};
    int zdim = int(zbasis.size());
    IntMatrix K(n * m, zdim);
    for (int c = 0; c < zdim; ++c)
        for (int r = 0; r < n * m; ++r) K.at(r, c) = zbasis[c][r];

    // B^1 generators: m -> ((A_g - I) e_i)_g, expressed in the Z^1 basis
    IntMatrix B(zdim, n);
    for (int i = 0; i < n; ++i) {
        std::vector<Int> cob(n * m);
        for (int a = 0; a < m; ++a)
            for (int r = 0; r < n; ++r) cob[a * n + r] = els[a].at(r, i) - (r == i ? 1 : 0);
        auto coords = exactmat::solve_in_column_space(K, cob);
        for (int r = 0; r < zdim; ++r) B.at(r, i) = coords[r];
    }

    auto snf = exactmat::smith_normal_form(B);
    std::vector<Int> divisors;
    int k = std::min(snf.S.rows(), snf.S.cols());
    int nonzero = 0;
    for (int t = 0; t < k; ++t)
        if (snf.S.at(t, t) != 0) ++nonzero;
    // H^1 of a finite group on a f.g. lattice is finite: B^1 must have full
    // rank inside Z^1
    if (nonzero != zdim)
        throw std::runtime_error("first_cohomology: coboundaries do not span Z^1 rationally");
    for (int t = 0; t < k; ++t)
        if (snf.S.at(t, t) > 1) divisors.push_back(snf.S.at(t, t));
    return divisors;
}

std::vector<std::vector<size_t>> verify_permutation_basis(
    const GLattice& L, const std::vector<IntMatrix>& generators,
    const std::vector<std::vector<Int>>& candidate) {
    int n = L.rank();
    if (int(candidate.size()) != n) throw NotABasis();
    IntMatrix T(n, n);
    for (int j = 0; j < n; ++j) {
        assert(int(candidate[j].size()) == n);
        for (int i = 0; i < n; ++i) T.at(i, j) = candidate[j][i];
    }
    Int d = exactmat::det(T);
    if (d != 1 && d != -1) throw NotABasis();

    std::vector<std::vector<size_t>> perms;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const IntMatrix& A = generators[gi];
        std::vector<size_t> images(candidate.size());
        std::vector<bool> hit(candidate.size(), false);
        for (size_t v = 0; v < candidate.size(); ++v) {
            auto img = A.apply(candidate[v]);
            bool found = false;
            for (size_t w = 0; w < candidate.size(); ++w) {
                if (img == candidate[w]) {
                    if (hit[w]) throw NotPermuted(gi, v);
                    images[v] = w;
                    hit[w] = true;
                    found = true;
                    break;
                }
            }
            if (!found) throw NotPermuted(gi, v);
        }
        perms.push_back(std::move(images));
    }
    return perms;
}

IntMatrix blowup_picard_action(const IntMatrix& base_action,
                               const std::vector<size_t>& exceptional_images) {
    assert(base_action.rows() == base_action.cols());
    int b = base_action.rows();
    int k = int(exceptional_images.size());
    IntMatrix M(b + k, b + k);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) M.at(i, j) = base_action.at(i, j);
    for (int j = 0; j < k; ++j) M.at(b + int(exceptional_images[j]), b + j) = 1;
    return M;
}

}  // namespace fano::glattice
