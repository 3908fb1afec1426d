#include <random>

#include "bkk/matrix.hpp"
#include "doctest.h"

using namespace bkk;

namespace {

IMat make(std::size_t r, std::size_t c, std::vector<long> vals) {
    IMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m[i][j] = vals[i * c + j];
    return m;
}

bool is_diagonal_dividing(const IMat& s, std::size_t rank) {
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            if (i != j && s[i][j] != 0) return false;
    for (std::size_t i = 0; i + 1 < rank; ++i)
        if (s[i + 1][i + 1] % s[i][i] != 0) return false;
    for (std::size_t i = 0; i < std::min(s.rows, s.cols); ++i) {
        if (i < rank && s[i][i] <= 0) return false;
        if (i >= rank && s[i][i] != 0) return false;
    }
    return true;
}

void check_smith(const IMat& m) {
    SmithForm f = smith_normal_form(m);
    CHECK(is_diagonal_dividing(f.s, f.rank));
    CHECK(abs(determinant(f.u)) == 1);
    CHECK(abs(determinant(f.v)) == 1);
    IMat prod = matmul(matmul(f.u, m), f.v);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) CHECK(prod[i][j] == f.s[i][j]);
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
    check_smith(make(2, 2, {2, 4, 6, 8}));
    check_smith(make(2, 2, {0, 0, 0, 0}));
    check_smith(make(1, 3, {6, 10, 15}));
    check_smith(make(3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 6}));
    check_smith(make(3, 2, {2, 0, 0, 3, 0, 0}));
    SmithForm f = smith_normal_form(make(2, 2, {2, 4, 6, 8}));
    CHECK(f.diagonal() == IVec{2, 4});
    f = smith_normal_form(make(1, 3, {6, 10, 15}));
    CHECK(f.diagonal() == IVec{1});
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dim(1, 5), entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        IMat m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) m[i][j] = entry(rng);
        check_smith(m);
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(make(0, 0, {})) == 1);
    CHECK(determinant(make(1, 1, {-7})) == -7);
    CHECK(determinant(make(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(determinant(make(3, 3, {2, 0, 1, 0, 3, 0, 1, 0, 2})) == 9);
    CHECK(determinant(make(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == 0);
    CHECK(determinant(make(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
}

TEST_CASE("determinant agrees with rank for singularity") {
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        IMat m(4, 4);
        QMat q(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                m[i][j] = entry(rng);
                q[i][j] = Rat(m[i][j]);
            }
        CHECK((determinant(m) == 0) == (rank(q) < 4));
    }
}

TEST_CASE("solve_square") {
    QMat m(2, 2);
    m[0] = {Rat(1), Rat(2)};
    m[1] = {Rat(3), Rat(4)};
    auto x = solve_square(m, {Rat(5), Rat(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(2));

    QMat sing(2, 2);
    sing[0] = {Rat(1), Rat(2)};
    sing[1] = {Rat(2), Rat(4)};
    CHECK(!solve_square(sing, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("kernel basis") {
    // kernel of (1 1 1) is 2-dimensional
    auto k = kernel_basis_int({IVec{1, 1, 1}}, 3);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);

    // full-rank square matrix has trivial kernel
    CHECK(kernel_basis_int({IVec{1, 0}, IVec{0, 1}}, 2).empty());
}
