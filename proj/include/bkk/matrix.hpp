#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bkk/numeric.hpp"

namespace bkk {

// Row-major dense matrices.  Integer matrices carry exact mpz entries,
// rational ones mpq; both are small (lattice rank at most ~8).
struct IMat {
    std::size_t rows = 0, cols = 0;
    std::vector<IVec> a;

    IMat() = default;
    IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, IVec(c, 0)) {}

    static IMat identity(std::size_t n) {
        IMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
        return m;
    }

    IVec& operator[](std::size_t i) { return a[i]; }
    const IVec& operator[](std::size_t i) const { return a[i]; }
};

struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<QVec> a;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, QVec(c, 0)) {}

    QVec& operator[](std::size_t i) { return a[i]; }
    const QVec& operator[](std::size_t i) const { return a[i]; }
};

IMat matmul(const IMat& x, const IMat& y);
IVec matvec(const IMat& m, const IVec& v);
QVec matvec(const IMat& m, const QVec& v);
IMat transpose(const IMat& m);

// Smith normal form: U * M * V == S with U, V unimodular and S diagonal,
// diagonal entries nonnegative and each dividing the next.
struct SmithForm {
    IMat u, s, v;
    std::size_t rank = 0;
    IVec diagonal() const;
};

SmithForm smith_normal_form(const IMat& m);

Int determinant(const IMat& m);
Rat determinant(const QMat& m);

std::size_t rank(const QMat& m);
std::size_t rank_of_rows(const std::vector<QVec>& rows);

// Solves m * x == b exactly; nullopt when the system is inconsistent or the
// solution is not unique (m must be square and nonsingular for a value).
std::optional<QVec> solve_square(const QMat& m, const QVec& b);

// Basis of the rational kernel {x : m x == 0}.
std::vector<QVec> kernel_basis(const QMat& m);
std::vector<QVec> kernel_basis_int(const std::vector<IVec>& rows, std::size_t cols);

}  // namespace bkk
