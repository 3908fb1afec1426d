#include <set>
#include <random>

#include "bkk/errors.hpp"
#include "bkk/fans.hpp"
#include "bkk/incremental.hpp"
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

SupportSet set3(std::vector<std::array<long, 3>> pts) {
    std::vector<IVec> v;
    for (auto [x, y, z] : pts) v.push_back(IVec{x, y, z});
    return SupportSet(3, std::move(v));
}

SupportSet unit_square() { return set2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

bool vertices_are(const Polytope& p, std::vector<IVec> expect) {
    auto v = p.lattice_vertices();
    std::sort(v.begin(), v.end());
    std::sort(expect.begin(), expect.end());
    return v == expect;
}

SupportSet random_set(std::mt19937& rng, std::size_t dim, int max_pts, long max_coord) {
    std::uniform_int_distribution<long> coord(0, max_coord);
    std::uniform_int_distribution<int> count(2, max_pts);
    std::vector<IVec> pts;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        IVec p(dim);
        for (auto& x : p) x = coord(rng);
        pts.push_back(p);
    }
    return SupportSet(dim, pts);
}

}  // namespace

TEST_CASE("hat of a one-dimensional support") {
    CriticalIncremental r = hat_incremental(set1({0, 1, 2}));
    CHECK(vertices_are(r.hat, {IVec{1}, IVec{3}}));
}

TEST_CASE("hat of the unit square is a vertical segment") {
    CriticalIncremental r = hat_incremental(unit_square());
    CHECK(vertices_are(r.hat, {IVec{1, 0}, IVec{1, 2}}));
    CHECK(r.contributing_b == std::vector<Int>{0, 2});
}

TEST_CASE("hat of a planar trapezoid support") {
    CriticalIncremental r = hat_incremental(set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
    CHECK(vertices_are(r.hat, {IVec{1, 0}, IVec{3, 0}, IVec{2, 1}, IVec{1, 1}}));
}

TEST_CASE("degenerate axis is rejected") {
    CHECK_THROWS_AS(hat_incremental(set2({{0, 0}, {0, 1}}), 0), DegenerateAxis);
    CHECK_NOTHROW(hat_incremental(set2({{0, 0}, {0, 1}}), 1));
}

TEST_CASE("hat support function is the minimum of the slice supports") {
    std::mt19937 rng(12);
    auto rays = primitive_ray_sample(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        SupportSet a = random_set(rng, 2, 6, 3);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant) continue;
        CriticalIncremental r = hat_incremental(a);
        if (r.hat.vertices.empty()) continue;
        SupportSet sum = a.pointwise_sum(a);
        for (const auto& l : rays) {
            Rat min_val;
            bool first = true;
            std::set<Int> bs;
            for (const auto& p : sum.points) bs.insert(p[0]);
            for (const auto& b : bs) {
                SupportSet cut;
                cut.ambient_dim = 2;
                for (const auto& p : sum.points)
                    if (p[0] != b) cut.points.push_back(p);
                if (cut.points.empty()) continue;
                Rat v = Rat(support_value(cut, l));
                if (first || v < min_val) min_val = v;
                first = false;
            }
            CHECK(support_value(r.hat, l) == min_val);
        }
    }
}

TEST_CASE("hat face identity") {
    HatFaceCheck c = hat_face_identity(unit_square(), IVec{0, 1});
    CHECK(!c.degenerate);
    CHECK(c.equal);
    CHECK(vertices_are(c.lhs, {IVec{1, 2}}));

    HatFaceCheck d = hat_face_identity(set1({0, 1, 2}), IVec{1});
    CHECK(d.degenerate);
    CHECK(d.equal);
}

TEST_CASE("hat face identity on random 3d supports") {
    std::mt19937 rng(77);
    auto rays = primitive_ray_sample(3, 1);
    int done = 0, trial = 0;
    while (done < 10 && trial < 200) {
        ++trial;
        SupportSet a = random_set(rng, 3, 6, 2);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant) continue;
        ++done;
        for (const auto& l : rays) {
            HatFaceCheck c = hat_face_identity(a, l);
            CHECK(c.equal);
        }
    }
    CHECK(done == 10);
}

TEST_CASE("hat dimension on spread supports") {
    // supports not in a line whose first coordinate takes >= 3 values
    std::mt19937 rng(55);
    int done = 0, trial = 0;
    while (done < 15 && trial < 500) {
        ++trial;
        SupportSet a = random_set(rng, 2, 7, 4);
        std::set<Int> xs;
        for (const auto& p : a.points) xs.insert(p[0]);
        if (xs.size() < 3 || hull(a).dim < 2) continue;
        ++done;
        CriticalIncremental r = hat_incremental(a);
        REQUIRE(!r.hat.vertices.empty());
        CHECK(r.hat.dim > 1);
    }
    CHECK(done == 15);
}

TEST_CASE("symmetric incremental of a horizontal segment") {
    SymmetricIncremental r = check_incremental(set2({{0, 0}, {2, 0}}));
    CHECK(r.d_a == 2);
    CHECK(vertices_are(r.check, {IVec{2, 0}, IVec{0, 2}}));
    CHECK(r.reduced.dim == 0);
    CHECK(vertices_are(r.reduced, {IVec{0, 0}}));
}

TEST_CASE("symmetric incremental of the unit triangle") {
    SymmetricIncremental r = check_incremental(set2({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(r.d_a == 1);
    CHECK(vertices_are(r.check, {IVec{1, 0}, IVec{2, 0}, IVec{0, 2}, IVec{0, 1}}));
    CHECK(vertices_are(r.reduced, {IVec{0, 0}, IVec{1, 0}, IVec{0, 1}}));
    // the slice supports dominate the incremental polytope
    for (const auto& [b, pb] : r.check_b)
        for (const auto& v : r.check.vertices) CHECK(pb.contains(v));
}

TEST_CASE("denominator undefined when A sits inside {d=0}") {
    CHECK_THROWS_AS(check_incremental(set2({{0, 0}, {1, 1}})), DenominatorUndefined);
}

TEST_CASE("reduced polytope plus the scaled segment reassembles the incremental") {
    std::mt19937 rng(99);
    int done = 0, trial = 0;
    while (done < 15 && trial < 300) {
        ++trial;
        SupportSet a = random_set(rng, 2, 6, 3);
        bool d_constant = true;
        for (const auto& p : a.points)
            if (p[0] - p[1] != a.points[0][0] - a.points[0][1]) d_constant = false;
        if (d_constant) continue;
        ++done;
        SymmetricIncremental r = check_incremental(a);
        // the assertion inside check_incremental already verifies the
        // summand property; double-check the support functions here
        for (const auto& l : primitive_ray_sample(2, 2))
            CHECK(support_value(r.check, l) ==
                  support_value(r.reduced, l) + Rat(r.d_a) * support_value(r.i_segment, l));
    }
    CHECK(done == 15);
}

TEST_CASE("planar supports have no blinders") {
    std::mt19937 rng(1234);
    int done = 0, trial = 0;
    while (done < 15 && trial < 300) {
        ++trial;
        SupportSet a = random_set(rng, 2, 6, 3);
        if (hull(a).dim != 2) continue;
        ++done;
        CHECK(blinders(a).empty());
    }
    CHECK(done == 15);
}

TEST_CASE("a spatial blinder is detected") {
    auto b = blinders(set3({{0, 0, 0}, {1, 1, 1}, {1, 0, 0}}));
    REQUIRE(b.size() == 1);
    CHECK(b[0] == set3({{0, 0, 0}, {1, 1, 1}}));
}

TEST_CASE("horizontal edges of the square") {
    auto h = horizontal_edges(unit_square(), 0);
    CHECK(h.size() == 2);
    for (const auto& e : h) CHECK(e.points[0][0] == e.points[1][0]);
    auto v = horizontal_edges(unit_square(), 1);
    CHECK(v.size() == 2);
}

TEST_CASE("condition star in low dimensions") {
    CHECK(condition_star(set2({{0, 0}, {2, 0}})));
    CHECK(condition_star(set2({{0, 0}, {1, 0}, {0, 1}})));
}

TEST_CASE("support sequences") {
    SupportSet a = set1({0, 1, 2});
    std::vector<QVec> v{{1, 1, 1}, {0, 1, 2}};
    CHECK(support_sequence(a, v, IVec{1}).phi == std::vector<Int>{2, 1});
    CHECK(support_sequence(a, v, IVec{-1}).phi == std::vector<Int>{0, -1});

    SupportSet b = set1({0, 1});
    std::vector<QVec> w{{1, 0}, {0, 1}};
    CHECK(support_sequence(b, w, IVec{1}).phi == std::vector<Int>{0, 1});
}

TEST_CASE("support sequence is invariant under unitriangular mixes") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> mix(-3, 3);
    SupportSet a = set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}});
    std::vector<QVec> v{{1, 1, 1, 1, 1}, {0, 1, 2, 0, 1}, {0, 0, 1, 0, 1}};
    for (const auto& l : primitive_ray_sample(2, 2)) {
        auto phi = support_sequence(a, v, l).phi;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<QVec> w = v;
            // w_i += random combination of earlier rows
            for (std::size_t i = 1; i < w.size(); ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    Rat c(mix(rng), 1 + std::abs(mix(rng)));
                    for (std::size_t p = 0; p < w[i].size(); ++p) w[i][p] += c * v[j][p];
                }
            CHECK(support_sequence(a, w, l).phi == phi);
        }
    }
}

TEST_CASE("dependent vectors are rejected") {
    SupportSet a = set1({0, 1});
    std::vector<QVec> v{{1, 1}, {2, 2}};
    CHECK_THROWS_AS(support_sequence(a, v, IVec{1}), DependentVectors);
}

TEST_CASE("derivative pair ties the support sequence to the hat polytope") {
    std::mt19937 rng(31);
    int done = 0, trial = 0;
    while (done < 12 && trial < 300) {
        ++trial;
        SupportSet a = random_set(rng, 2, 6, 3);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant) continue;
        CriticalIncremental r = hat_incremental(a);
        if (r.hat.vertices.empty()) continue;
        ++done;
        std::vector<QVec> v(2, QVec(a.points.size()));
        for (std::size_t j = 0; j < a.points.size(); ++j) {
            v[0][j] = 1;
            v[1][j] = Rat(a.points[j][0]);
        }
        for (const auto& l : primitive_ray_sample(2, 2)) {
            auto phi = support_sequence(a, v, l).phi;
            CHECK(phi[0] == support_value(a, l));
            CHECK(Rat(phi[0] + phi[1]) == support_value(r.hat, l));
        }
    }
    CHECK(done == 12);
}

TEST_CASE("detect incrementals from the derivative pair") {
    SupportSet a = set1({0, 1, 2});
    std::vector<QVec> v{{1, 1, 1}, {0, 1, 2}};
    auto inc = detect_incrementals(a, v, primitive_ray_sample(1, 1));
    REQUIRE(inc.size() == 2);
    REQUIRE(inc[0].has_value());
    REQUIRE(inc[1].has_value());
    CHECK(vertices_are(*inc[0], {IVec{0}, IVec{2}}));
    CHECK(vertices_are(*inc[1], {IVec{1}, IVec{3}}));

    SupportSet sq = unit_square();
    std::vector<QVec> w{{1, 1, 1, 1}, {0, 1, 0, 1}};
    auto inc2 = detect_incrementals(sq, w, primitive_ray_sample(2, 2));
    REQUIRE(inc2.size() == 2);
    REQUIRE(inc2[0].has_value());
    REQUIRE(inc2[1].has_value());
    CHECK(vertices_are(*inc2[0], {IVec{0, 0}, IVec{1, 0}, IVec{0, 1}, IVec{1, 1}}));
    CHECK(vertices_are(*inc2[1], {IVec{1, 0}, IVec{1, 2}}));
}

TEST_CASE("non-convex partial sums are reported as absent") {
    // coefficients engineered so that phi_l(1)+phi_l(2) violates convexity:
    // v2 supported on a single interior point
    SupportSet a = set1({0, 1, 2});
    std::vector<QVec> v{{1, 0, 1}, {0, 1, 0}};
    auto inc = detect_incrementals(a, v, primitive_ray_sample(1, 1));
    REQUIRE(inc.size() == 2);
    // j=1: support values l=+1 -> 2, l=-1 -> 0: the full segment
    CHECK(inc[0].has_value());
    // j=2: sums 2+1=3 and 0+(-1+2)=... the pair must fail or match exactly;
    // recompute honestly
    auto p1 = support_sequence(a, v, IVec{1}).phi;
    auto m1 = support_sequence(a, v, IVec{-1}).phi;
    Int hi = p1[0] + p1[1], lo = -(m1[0] + m1[1]);
    if (lo > hi)
        CHECK(!inc[1].has_value());
    else
        CHECK(inc[1].has_value());
}

TEST_CASE("hat polytope is compatible with the critical tropical fan") {
    std::mt19937 rng(8080);
    int done = 0, trial = 0;
    while (done < 5 && trial < 200) {
        ++trial;
        SupportSet a = random_set(rng, 3, 6, 3);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant || hull(a).dim < 3) continue;
        CriticalIncremental r = hat_incremental(a);
        if (r.hat.vertices.empty()) continue;
        ++done;
        SupportSet hat_pts = r.hat.to_support_set();
        WeightedFan diff = fan_sum(dual_fan(hat_pts), fan_scale(dual_fan(a), -1));
        WeightedFan crit = stable_intersection(dual_fan(a), diff);
        CHECK(is_compatible(hat_pts, crit));
    }
    CHECK(done == 5);
}
