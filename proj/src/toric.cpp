#include "fano/toric.hpp"

#include <algorithm>
#include <set>

namespace fano::toric {

CoxPresentation::CoxPresentation(std::vector<std::string> coords, IntMatrix g,
                                 std::vector<int> basis, std::vector<std::vector<int>> irrelevant)
    : coordinates(std::move(coords)), grading(std::move(g)), picard_basis(std::move(basis)),
      irrelevant_monomials(std::move(irrelevant)) {
    int rho = grading.rows();
    int n = grading.cols();
    if (int(coordinates.size()) != n)
        throw std::runtime_error("cox: coordinate count must match the grading columns");
    if (int(picard_basis.size()) != rho)
        throw std::runtime_error("cox: picard basis size must match the grading rank");
    IntMatrix B(rho, rho);
    for (int c = 0; c < rho; ++c)
        for (int r = 0; r < rho; ++r) B.at(r, c) = grading.at(r, picard_basis[size_t(c)]);
    Int d = exactmat::det(B);
    if (d != 1 && d != -1)
        throw std::runtime_error("cox: picard basis columns are not unimodular");
    if (irrelevant_monomials.empty()) throw std::runtime_error("cox: irrelevant ideal is empty");
    for (const auto& m : irrelevant_monomials) {
        std::set<int> s(m.begin(), m.end());
        if (s.size() != m.size()) throw std::runtime_error("cox: irrelevant monomial not squarefree");
        for (int i : m)
            if (i < 0 || i >= n) throw std::runtime_error("cox: irrelevant monomial index range");
    }
}

IntMatrix induced_picard_matrix(const CoxPresentation& cox, const std::vector<int>& perm) {
    int rho = cox.grading.rows();
    int n = cox.grading.cols();
    if (int(perm.size()) != n) throw std::runtime_error("permutation size mismatch");

    IntMatrix B(rho, rho);
    for (int c = 0; c < rho; ++c)
        for (int r = 0; r < rho; ++r) B.at(r, c) = cox.grading.at(r, cox.picard_basis[size_t(c)]);
    IntMatrix Binv = exactmat::unimodular_inverse(B);

    auto basis_coords = [&](int j) {
        std::vector<Int> col(static_cast<size_t>(rho));
        for (int r = 0; r < rho; ++r) col[size_t(r)] = cox.grading.at(r, j);
        return Binv.apply(col);
    };

    IntMatrix M(rho, rho);
    for (int i = 0; i < rho; ++i) {
        auto row = basis_coords(perm[size_t(cox.picard_basis[size_t(i)])]);
        for (int j = 0; j < rho; ++j) M.at(i, j) = row[size_t(j)];
    }
    // consistency at every coordinate: class(j) |-> class(perm(j)) under the
    // row action c -> c * M
    for (int j = 0; j < n; ++j) {
        auto cj = basis_coords(j);
        std::vector<Int> img(static_cast<size_t>(rho));
        for (int t = 0; t < rho; ++t)
            for (int r = 0; r < rho; ++r) img[size_t(t)] += cj[size_t(r)] * M.at(r, t);
        if (img != basis_coords(perm[size_t(j)]))
            throw Incompatible(j, cox.coordinates[size_t(j)]);
    }
    return M;
}

bool preserves_irrelevant_ideal(const CoxPresentation& cox, const std::vector<int>& perm) {
    std::set<std::vector<int>> orig, image;
    for (const auto& m : cox.irrelevant_monomials) {
        std::vector<int> sorted_m = m;
        std::sort(sorted_m.begin(), sorted_m.end());
        orig.insert(sorted_m);
        std::vector<int> im;
        for (int i : m) im.push_back(perm[size_t(i)]);
        std::sort(im.begin(), im.end());
        image.insert(im);
    }
    return orig == image;
}

}  // namespace fano::toric
