#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bkk/lattice.hpp"
#include "bkk/matrix.hpp"
#include "bkk/numeric.hpp"

namespace bkk {

// Closed halfspace {x : normal . x <= offset}; normal is primitive integer.
struct Halfspace {
    IVec normal;
    Rat offset;
};

// Exact convex polytope: vertices in canonical (lexicographic) order together
// with the supporting facet inequalities of the affine span and the equations
// cutting out the span itself.
struct Polytope {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;  // dimension of the affine span
    std::vector<QVec> vertices;
    std::vector<Halfspace> facets;  // supporting within the span; empty when dim == 0
    std::vector<Halfspace> span_equations;  // normal . x == offset on the whole polytope

    bool is_lattice() const;
    std::vector<IVec> lattice_vertices() const;  // throws NotLattice
    SupportSet to_support_set() const;           // lattice vertices as a SupportSet
    bool contains(const QVec& x) const;
    bool operator==(const Polytope& other) const;  // equality of canonical vertex lists
};

// Convex hull (V- and H-representation) of a finite point set; works in any
// dimension via the affine span.
Polytope hull(const SupportSet& a);
Polytope hull(std::size_t ambient_dim, std::vector<QVec> points);

// Vertices of a bounded intersection of halfspaces; empty vertex list when the
// intersection is empty.  The input must be bounded.
Polytope from_halfspaces(std::size_t ambient_dim, const std::vector<Halfspace>& hs);

// Brute-force hull reference: a point is a vertex iff it is not in the hull of
// the others (tested by exact LP-free barycentric search over simplices).
std::vector<IVec> hull_vertices_reference(const SupportSet& a);

// Support data, max convention: A(l) = max l(A), A^l = argmax.
Int support_value(const SupportSet& a, const IVec& l);
SupportSet support_face(const SupportSet& a, const IVec& l);
Rat support_value(const Polytope& p, const IVec& l);
// Second-highest value/face of l on A; throws SecondValueUndefined when l is
// constant on A.
Int second_support_value(const SupportSet& a, const IVec& l);
SupportSet second_support_face(const SupportSet& a, const IVec& l);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
// {x : x + Q subset of P}; throws EmptyResult when Q has no room inside P.
Polytope minkowski_diff(const Polytope& p, const Polytope& q);

// Lattice volume Vol_Z = dim! * euclidean volume, measured in the saturated
// lattice of the affine span.  Zero-dimensional bodies count as 0 (the
// mixed-volume convention).
Int lattice_volume(const SupportSet& a);
Int lattice_volume(const Polytope& p);
// Same, except a single point counts as 1: the convention used by the
// face-sum count formulas, where a vertex face contributes its own class.
Int face_volume(const SupportSet& a);

// dim! times the euclidean volume of the hull of rational points spanning
// Z^dim; the rational-vertex companion of lattice_volume.  Returns 0 when the
// points span a lower-dimensional flat.
Rat rational_volume(std::size_t dim, const std::vector<QVec>& points);

// Independent volume oracle: lattice-point counts of dilates 0..dim,
// interpolated (top finite difference of the Ehrhart polynomial).
Int ehrhart_volume(const SupportSet& a);

// All lattice points of conv(A).
std::vector<IVec> lattice_points(const SupportSet& a);

// Lattice mixed volume of ambient_dim many polytopes (inclusion-exclusion
// over subset sums).  Parallel by default; the serial variant is the
// reference implementation.
Int mixed_volume(const std::vector<SupportSet>& as);
Int mixed_volume_serial(const std::vector<SupportSet>& as);
// k-dimensional mixed volume of k sets lying in parallel k-planes
// (after a joint shift); 0 when the joint directions span less than k.
Int mixed_volume_k(const std::vector<SupportSet>& as);

// Witness t with A + t strictly inside B, when one exists; requires B
// full-dimensional (else returns nullopt).
std::optional<QVec> shiftable_into_interior(const SupportSet& a, const SupportSet& b);

// Face of conv(A) as the subset of A it contains, with one supporting
// functional; dim is the affine dimension of the face.
struct Face {
    SupportSet points;
    IVec normal;  // support_face(A, normal) == points; zero vector for A itself
    std::size_t dim = 0;
};

// Every nonempty face of conv(A), including vertices and A itself.
std::vector<Face> all_faces(const SupportSet& a);

}  // namespace bkk
