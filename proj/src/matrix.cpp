#include "bkk/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace bkk {

IMat matmul(const IMat& x, const IMat& y) {
    assert(x.cols == y.rows);
    IMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < y.cols; ++j)
                    r[i][j] += x[i][k] * y[k][j];
    return r;
}

IVec matvec(const IMat& m, const IVec& v) {
    assert(m.cols == v.size());
    IVec r(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) r[i] = dot(m[i], v);
    return r;
}

QVec matvec(const IMat& m, const QVec& v) {
    assert(m.cols == v.size());
    QVec r(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) r[i] = dot(m[i], v);
    return r;
}

IMat transpose(const IMat& m) {
    IMat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[j][i] = m[i][j];
    return r;
}

IVec SmithForm::diagonal() const {
    IVec d;
    std::size_t n = std::min(s.rows, s.cols);
    for (std::size_t i = 0; i < n; ++i) d.push_back(s[i][i]);
    return d;
}

namespace {

void swap_rows(IMat& m, std::size_t i, std::size_t j) { std::swap(m.a[i], m.a[j]); }

void swap_cols(IMat& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m[r][i], m[r][j]);
}

// row i -= q * row j
void row_op(IMat& m, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < m.cols; ++c) m[i][c] -= q * m[j][c];
}

void col_op(IMat& m, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t r = 0; r < m.rows; ++r) m[r][i] -= q * m[r][j];
}

}  // namespace

SmithForm smith_normal_form(const IMat& m) {
    SmithForm f;
    f.s = m;
    f.u = IMat::identity(m.rows);
    f.v = IMat::identity(m.cols);
    IMat& s = f.s;

    std::size_t t = 0;
    while (t < s.rows && t < s.cols) {
        // find a pivot with the smallest nonzero absolute value
        std::size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (std::size_t i = t; i < s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j)
                if (s[i][j] != 0) {
                    Int v = abs(s[i][j]);
                    if (!found || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
        if (!found) break;
        if (pi != t) {
            swap_rows(s, t, pi);
            swap_rows(f.u, t, pi);
        }
        if (pj != t) {
            swap_cols(s, t, pj);
            swap_cols(f.v, t, pj);
        }

        bool clean = true;
        do {
            clean = true;
            for (std::size_t i = t + 1; i < s.rows; ++i) {
                if (s[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
                row_op(s, i, t, q);
                row_op(f.u, i, t, q);
                if (s[i][t] != 0) {
                    swap_rows(s, t, i);
                    swap_rows(f.u, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < s.cols; ++j) {
                if (s[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
                col_op(s, j, t, q);
                col_op(f.v, j, t, q);
                if (s[t][j] != 0) {
                    swap_cols(s, t, j);
                    swap_cols(f.v, t, j);
                    clean = false;
                }
            }
        } while (!clean);

        // pivot must divide everything below-right of it
        bool divides = true;
        for (std::size_t i = t + 1; i < s.rows && divides; ++i)
            for (std::size_t j = t + 1; j < s.cols && divides; ++j)
                if (s[i][j] % s[t][t] != 0) {
                    row_op(s, t, i, Int(-1));
                    row_op(f.u, t, i, Int(-1));
                    divides = false;
                }
        if (!divides) continue;

        if (s[t][t] < 0) {
            for (std::size_t j = 0; j < s.cols; ++j) s[t][j] = -s[t][j];
            for (std::size_t j = 0; j < f.u.cols; ++j) f.u[t][j] = -f.u[t][j];
        }
        ++t;
    }
    f.rank = t;
    return f;
}

Int determinant(const IMat& m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    if (n == 0) return 1;
    // fraction-free Bareiss elimination
    IMat a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a.a[k], a.a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rat determinant(const QMat& m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    if (n == 0) return 1;
    QMat a = m;
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a.a[k], a.a[p]);
            det = -det;
        }
        det *= a[k][k];
        Rat inv = 1 / a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

namespace {

// Returns pivot columns; reduces rows in place to echelon form.
std::vector<std::size_t> echelon(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m[p][c] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(m.a[r], m.a[p]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < m.cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < m.cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const QMat& m) {
    QMat t = m;
    return echelon(t).size();
}

std::size_t rank_of_rows(const std::vector<QVec>& rows) {
    if (rows.empty()) return 0;
    QMat m(rows.size(), rows[0].size());
    m.a = rows;
    return rank(m);
}

std::optional<QVec> solve_square(const QMat& m, const QVec& b) {
    assert(m.rows == m.cols && b.size() == m.rows);
    QMat aug(m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug[i][j] = m[i][j];
        aug[i][m.cols] = b[i];
    }
    auto pivots = echelon(aug);
    if (pivots.size() != m.cols) return std::nullopt;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != i) return std::nullopt;
    QVec x(m.cols);
    for (std::size_t i = 0; i < m.cols; ++i) x[i] = aug[i][m.cols];
    return x;
}

std::vector<QVec> kernel_basis(const QMat& m) {
    QMat t = m;
    auto pivots = echelon(t);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(m.cols, 0);
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (pivots[i] < c) v[pivots[i]] = -t[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVec> kernel_basis_int(const std::vector<IVec>& rows, std::size_t cols) {
    QMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m[i] = to_rational(rows[i]);
    return kernel_basis(m);
}

}  // namespace bkk
