#include "fano/exactmat.hpp"

#include <cassert>
#include <sstream>

namespace fano::exactmat {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        assert(int(rows[i].size()) == c);
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    assert(cols_ == o.rows_);
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t k = 0; k < e_.size(); ++k) {
        int c = cmp(e_[k], o.e_[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    assert(int(v.size()) == cols_);
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void addmul_row(IntMatrix& m, int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    HnfResult res{M, IntMatrix::identity(rows), 0};
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        // smallest-magnitude nonzero entry in the column at or below pr
        int best = -1;
        for (int r = pr; r < rows; ++r) {
            if (H.at(r, pc) == 0) continue;
            if (best < 0 || mpz_cmpabs(H.at(r, pc).get_mpz_t(), H.at(best, pc).get_mpz_t()) < 0)
                best = r;
        }
        if (best < 0) continue;
        swap_rows(H, pr, best);
        swap_rows(U, pr, best);
        bool again = true;
        while (again) {
            again = false;
            for (int r = pr + 1; r < rows; ++r) {
                if (H.at(r, pc) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H.at(r, pc).get_mpz_t(), H.at(pr, pc).get_mpz_t());
                addmul_row(H, r, pr, q);
                addmul_row(U, r, pr, q);
                if (H.at(r, pc) != 0) {
                    swap_rows(H, pr, r);
                    swap_rows(U, pr, r);
                    again = true;
                }
            }
        }
        if (H.at(pr, pc) < 0) {
            negate_row(H, pr);
            negate_row(U, pr);
        }
        for (int r = 0; r < pr; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(r, pc).get_mpz_t(), H.at(pr, pc).get_mpz_t());
            addmul_row(H, r, pr, q);
            addmul_row(U, r, pr, q);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

SnfResult smith_normal_form(const IntMatrix& M) {
    int rows = M.rows(), cols = M.cols();
    SnfResult res{M, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& S = res.S;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    auto swap_cols = [&](IntMatrix& m, int a, int b) {
        if (a == b) return;
        for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    };
    auto addmul_col = [&](IntMatrix& m, int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
    };

    int n = std::min(rows, cols);
    for (int t = 0; t < n; ++t) {
        // smallest-magnitude nonzero entry in the trailing submatrix,
        // row-major tie break
        int bi = -1, bj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (S.at(i, j) == 0) continue;
                if (bi < 0 || mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(bi, bj).get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        swap_rows(S, t, bi);
        swap_rows(U, t, bi);
        swap_cols(S, t, bj);
        swap_cols(V, t, bj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; ++i) {
                if (S.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, t).get_mpz_t(), S.at(t, t).get_mpz_t());
                addmul_row(S, i, t, q);
                addmul_row(U, i, t, q);
                if (S.at(i, t) != 0) {
                    swap_rows(S, t, i);
                    swap_rows(U, t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (S.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(t, j).get_mpz_t(), S.at(t, t).get_mpz_t());
                addmul_col(S, j, t, q);
                addmul_col(V, j, t, q);
                if (S.at(t, j) != 0) {
                    swap_cols(S, t, j);
                    swap_cols(V, t, j);
                    dirty = true;
                }
            }
        }
        // divisibility: pivot must divide the whole trailing block
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i)
            for (int j = t + 1; j < cols && !restart; ++j) {
                if (S.at(i, j) % S.at(t, t) != 0) {
                    for (int c = 0; c < cols; ++c) S.at(t, c) += S.at(i, c);
                    for (int c = 0; c < rows; ++c) U.at(t, c) += U.at(i, c);
                    restart = true;
                }
            }
        if (restart) {
            --t;
            continue;
        }
        if (S.at(t, t) < 0) {
            negate_row(S, t);
            negate_row(U, t);
        }
    }
    return res;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M) {
    auto res = hermite_normal_form(M.transpose());
    std::vector<std::vector<Int>> basis;
    for (int r = 0; r < res.H.rows(); ++r) {
        bool zero = true;
        for (int j = 0; j < res.H.cols(); ++j)
            if (res.H.at(r, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<Int> v(res.U.cols());
        for (int j = 0; j < res.U.cols(); ++j) v[j] = res.U.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const IntMatrix& M) { return hermite_normal_form(M).rank; }

Int det(const IntMatrix& M) {
    assert(M.rows() == M.cols());
    int n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;  // fraction-free Bareiss
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            swap_rows(A, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                A.at(i, j) = A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), A.at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw NotUnimodular();
    auto res = hermite_normal_form(M);
    if (!res.H.is_identity()) throw NotUnimodular();
    return res.U;
}

std::vector<Int> solve_in_column_space(const IntMatrix& K, const std::vector<Int>& b) {
    // row-reduce b against H = hnf(K^T); coefficients transfer through U.
    assert(int(b.size()) == K.rows());
    auto res = hermite_normal_form(K.transpose());
    const IntMatrix& H = res.H;
    const IntMatrix& U = res.U;
    std::vector<Int> rem = b;
    std::vector<Int> coef(H.rows());
    for (int r = 0; r < H.rows(); ++r) {
        int p = -1;
        for (int j = 0; j < H.cols(); ++j)
            if (H.at(r, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) break;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rem[p].get_mpz_t(), H.at(r, p).get_mpz_t());
        if (rem[p] % H.at(r, p) != 0)
            throw std::runtime_error("solve_in_column_space: non-integral solution");
        coef[r] = rem[p] / H.at(r, p);
        for (int j = 0; j < H.cols(); ++j) rem[j] -= coef[r] * H.at(r, j);
    }
    for (auto& x : rem)
        if (x != 0) throw std::runtime_error("solve_in_column_space: vector outside column space");
    std::vector<Int> x(K.cols());
    for (int r = 0; r < H.rows(); ++r)
        if (coef[r] != 0)
            for (int j = 0; j < U.cols(); ++j) x[j] += coef[r] * U.at(r, j);
    return x;
}

}  // namespace fano::exactmat
