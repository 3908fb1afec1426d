#include <random>

#include "bkk/errors.hpp"
#include "bkk/toric_sing.hpp"
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

TEST_CASE("face lattice of a segment with an interior point") {
    FaceLattice l = face_lattice(set1({0, 1, 3}));
    REQUIRE(l.faces.size() == 3);
    CHECK(l.faces[0].points == std::vector<IVec>{IVec{0}});
    CHECK(l.faces[1].points == std::vector<IVec>{IVec{3}});
    CHECK(l.faces[2].size() == 3);  // A itself keeps the interior point
    CHECK(l.dims == std::vector<std::size_t>{0, 0, 1});
    CHECK(l.contains_face(0, 2));
    CHECK(!l.contains_face(2, 0));
    CHECK(!l.contains_face(0, 1));
}

TEST_CASE("face lattice of the unit square") {
    FaceLattice l = face_lattice(unit_square());
    REQUIRE(l.faces.size() == 9);
    int by_dim[3] = {0, 0, 0};
    for (auto d : l.dims) ++by_dim[d];
    CHECK(by_dim[0] == 4);
    CHECK(by_dim[1] == 4);
    CHECK(by_dim[2] == 1);
}

TEST_CASE("face lattice of a degenerate collinear set") {
    FaceLattice l = face_lattice(set2({{0, 0}, {1, 1}, {2, 2}}));
    REQUIRE(l.faces.size() == 3);
    CHECK(l.faces[0].points == std::vector<IVec>{IVec{0, 0}});
    CHECK(l.faces[1].points == std::vector<IVec>{IVec{2, 2}});
    CHECK(l.faces[2].size() == 3);  // the middle point is not a face by itself
}

TEST_CASE("link volumes of the asymmetric segment") {
    SupportSet a = set1({0, 1, 3});
    CHECK(link_volume(a, set1({0})) == 1);
    CHECK(link_volume(a, set1({3})) == 2);
    CHECK_THROWS_AS(link_volume(a, set1({1})), NotAFace);
    CHECK_THROWS_AS(link_volume(a, a), NotAFace);
}

TEST_CASE("link volumes of planar supports") {
    SupportSet sq = unit_square();
    CHECK(link_volume(sq, set2({{0, 0}, {1, 0}})) == 1);
    CHECK(link_volume(sq, set2({{0, 0}})) == 1);
    SupportSet tri = set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(link_volume(tri, set2({{0, 0}, {1, 0}, {2, 0}})) == 1);
}

TEST_CASE("link volume is invariant under unimodular maps") {
    SupportSet a = set2({{0, 0}, {2, 0}, {0, 3}, {1, 1}});
    IMat u(2, 2);
    u[0] = IVec{1, 1};
    u[1] = IVec{1, 2};  // det 1
    SupportSet ua = a.mapped(u);
    FaceLattice l = face_lattice(a);
    for (std::size_t i = 0; i + 1 < l.faces.size(); ++i)
        CHECK(link_volume(a, l.faces[i]) == link_volume(ua, l.faces[i].mapped(u)));
}

TEST_CASE("obstructions of the asymmetric segment") {
    SupportSet a = set1({0, 1, 3});
    ObstructionTable t = euler_obstructions(a);
    std::size_t ia = t.lattice.index_of(a);
    std::size_t i0 = t.lattice.index_of(set1({0}));
    std::size_t i3 = t.lattice.index_of(set1({3}));
    CHECK(t.multiplicity(i0, ia) == 1);
    CHECK(t.multiplicity(i3, ia) == 2);
    CHECK(t.obstruction(i0, ia) == -1);
    CHECK(t.obstruction(i3, ia) == -2);
    CHECK(t.obstruction(ia, ia) == 1);
}

TEST_CASE("obstructions of a smooth polytope are trivial multiplicities") {
    ObstructionTable t = euler_obstructions(unit_square());
    std::size_t ia = t.lattice.index_of(unit_square());
    for (std::size_t i = 0; i < t.lattice.faces.size(); ++i)
        if (i != ia && t.lattice.contains_face(i, ia)) CHECK(t.multiplicity(i, ia) == 1);
}

TEST_CASE("multiplicities and obstructions are inverse matrices") {
    std::mt19937 rng(4242);
    auto check_inverse = [](const SupportSet& a) {
        ObstructionTable t = euler_obstructions(a);
        IMat prod = matmul(t.c, t.e);
        std::size_t m = t.lattice.faces.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) CHECK(prod[i][j] == (i == j ? 1 : 0));
        // proper-face multiplicities are positive
        std::size_t ia = m - 1;
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (t.lattice.contains_face(i, ia)) CHECK(t.multiplicity(i, ia) >= 1);
    };
    for (int trial = 0; trial < 10; ++trial) check_inverse(random_set(rng, 2, 6, 3));
    for (int trial = 0; trial < 10; ++trial) check_inverse(random_set(rng, 3, 6, 2));
}

TEST_CASE("reflexive polytopes") {
    Polytope big = hull(set2({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}));
    auto o = reflexive_origin(big);
    REQUIRE(o.has_value());
    CHECK(*o == IVec{0, 0});

    CHECK(is_reflexive(hull(set2({{1, 0}, {0, 1}, {-1, -1}}))));
    CHECK(!is_reflexive(hull(unit_square())));  // no interior lattice point
    CHECK(is_reflexive(hull(set2({{0, 0}, {2, 0}, {0, 2}, {2, 2}}))));  // shifted square

    CHECK_THROWS_AS(is_reflexive(hull(set2({{0, 0}, {1, 0}}))), NotFullDim);
}
