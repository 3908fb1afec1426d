#include <random>

#include "bkk/critical_counts.hpp"
#include "bkk/errors.hpp"
#include "bkk/oracle.hpp"
#include "bkk/polytope.hpp"
#include "doctest.h"

using namespace bkk;

namespace {

SupportSet set1(std::vector<long> xs) {
    std::vector<IVec> v;
    for (auto x : xs) v.push_back(IVec{x});
    return SupportSet(1, std::move(v));
}

SupportSet set2(std::vector<std::pair<long, long>> pts) {
    std::vector<IVec> v;
    for (auto [x, y] : pts) v.push_back(IVec{x, y});
    return SupportSet(2, std::move(v));
}

SupportSet unit_square() { return set2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

SupportSet random_set2(std::mt19937& rng, long lo, long hi, int min_pts, int max_pts) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::uniform_int_distribution<int> count(min_pts, max_pts);
    std::vector<IVec> pts;
    int k = count(rng);
    for (int i = 0; i < k; ++i) pts.push_back(IVec{coord(rng), coord(rng)});
    return SupportSet(2, pts);
}

}  // namespace

TEST_CASE("coefficient sampling") {
    SupportSet a = unit_square();
    CoefficientAssignment f = sample(a, 7);
    CoefficientAssignment g = sample(a, 7);
    CHECK(f.support == g.support);
    CHECK(f.coeffs == g.coeffs);

    CoefficientAssignment h = sample(a, 8);
    CHECK(f.coeffs != h.coeffs);

    for (const Rat& c : f.coeffs) {
        CHECK(c != 0);
        CHECK(abs(c.get_num()) <= 1000000);
        CHECK(c.get_den() <= 1000000);
    }
}

TEST_CASE("derivatives and weights") {
    CoefficientAssignment f = sample(set1({0, 1, 2}), 11);
    CoefficientAssignment fx = derivative(f, 0);
    REQUIRE(fx.support == set1({0, 1}));
    CHECK(fx.coeffs[0] == f.coeffs[1]);
    CHECK(fx.coeffs[1] == 2 * f.coeffs[2]);

    std::vector<Rat> ones(f.coeffs.size(), Rat(1));
    CoefficientAssignment same = weighted(f, ones);
    CHECK(same.support == f.support);
    CHECK(same.coeffs == f.coeffs);

    // a vanishing weight shrinks the support
    CoefficientAssignment cut = weighted(f, {Rat(0), Rat(1), Rat(3)});
    CHECK(cut.support == set1({1, 2}));
    CHECK(cut.coeffs[1] == 3 * f.coeffs[2]);

    CHECK_THROWS_AS(derivative(f, 1), DimensionMismatch);
}

TEST_CASE("univariate root counts") {
    CHECK(count_roots_1d(sample(set1({0, 1, 2}), 3)) == 2);
    CHECK(count_roots_1d(sample(set1({1, 2, 4}), 3)) == 3);
    // a monomial has no roots in the punctured line
    CHECK(count_roots_1d(sample(set1({5}), 3)) == 0);
    CHECK(count_roots_1d(sample(set1({-2, 1}), 3)) == 3);
}

TEST_CASE("bivariate root counts") {
    SupportSet sq = unit_square();
    CHECK(count_roots_2d(sample(sq, 1), sample(sq, 2)) == 2);
    CHECK(mixed_volume({sq, sq}) == 2);

    // f and its x-derivative on the trapezoid: one common root
    CoefficientAssignment f = sample(set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}}), 5);
    CHECK(count_roots_2d(f, derivative(f, 0)) == 1);

    // one support on a line: the zero set splits into cosets and the count
    // factors through the projection
    SupportSet axis = set2({{0, 0}, {1, 0}, {3, 0}});
    CHECK(count_roots_2d(sample(axis, 4), sample(sq, 4)) == 3);
    CHECK(mixed_volume({axis, sq}) == 3);

    // random full-dimensional pairs reproduce the mixed volume
    std::mt19937 rng(31);
    int done = 0, tried = 0;
    while (done < 12 && tried < 60) {
        ++tried;
        SupportSet a = random_set2(rng, -2, 3, 3, 5);
        SupportSet b = random_set2(rng, -2, 3, 3, 5);
        Int n;
        try {
            n = count_roots_2d(sample(a, 100 + tried), sample(b, 200 + tried));
        } catch (const OracleInconclusive&) {
            continue;
        }
        CHECK(n == mixed_volume({a, b}));
        ++done;
    }
    CHECK(done >= 12);
}

TEST_CASE("critical point oracle") {
    CHECK(count_critical_oracle(set1({1, 2, 4}), OracleMode::critical_df, 1) == 3);
    CHECK(count_critical_oracle(unit_square(), OracleMode::hypersurface_s1, 1) == 0);
    CHECK(count_critical_oracle(set2({{1, 0}, {0, 1}, {1, 1}}), OracleMode::critical_df, 1) == 1);
    // the trapezoid: f = f_x = 0 eliminates to a single point
    CHECK(count_critical_oracle(set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                                OracleMode::hypersurface_s1_first_axis, 1) == 1);
    CHECK_THROWS_AS(count_critical_oracle(SupportSet(3, {IVec{0, 0, 0}}),
                                          OracleMode::critical_df, 1),
                    DimensionMismatch);
}

TEST_CASE("oracle agrees with the combinatorial counts") {
    std::mt19937 rng(47);

    // one variable: supports up to 6 points, exponents up to 3 in absolute value
    std::uniform_int_distribution<long> coord1(-3, 3);
    std::uniform_int_distribution<int> count1(2, 6);
    int done1 = 0, tried1 = 0;
    while (done1 < 15 && tried1 < 120) {
        ++tried1;
        std::vector<IVec> pts;
        int k = count1(rng);
        for (int i = 0; i < k; ++i) {
            long c = coord1(rng);
            if (c != 0) pts.push_back(IVec{c});
        }
        if (pts.size() < 2) continue;
        SupportSet a(1, std::move(pts));
        Int actual_df, actual_s1;
        try {
            actual_df = count_critical_oracle(a, OracleMode::critical_df, 900 + tried1);
            actual_s1 = count_critical_oracle(a, OracleMode::hypersurface_s1, 900 + tried1);
        } catch (const OracleInconclusive&) {
            continue;
        }
        CountResult df = count_df(a);
        CHECK(actual_df == df.count * df.saturation_index);
        CHECK(actual_s1 == count_s1(a).count);
        ++done1;
    }
    CHECK(done1 >= 15);

    // two variables
    int done2 = 0, tried2 = 0;
    while (done2 < 20 && tried2 < 200) {
        ++tried2;
        SupportSet a = random_set2(rng, -3, 3, 3, 6);
        bool origin = false;
        for (const IVec& p : a.points)
            if (is_zero(p)) origin = true;
        if (origin) continue;  // the constant term is outside the df theorem
        Int actual_df, actual_s1;
        try {
            actual_df = count_critical_oracle(a, OracleMode::critical_df, 3000 + tried2);
            actual_s1 = count_critical_oracle(a, OracleMode::hypersurface_s1, 3000 + tried2);
        } catch (const OracleInconclusive&) {
            continue;
        }
        CountResult df = count_df(a);
        CHECK(actual_df == df.count * df.saturation_index);
        CHECK(actual_s1 == count_s1(a).count);
        ++done2;
    }
    CHECK(done2 >= 20);
}
