#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bkk/lattice.hpp"
#include "bkk/numeric.hpp"
#include "bkk/polytope.hpp"

namespace bkk {

// Rational polyhedral cone with both generator and halfspace descriptions.
// x is in the cone iff every inequality gives n.x <= 0 and every equation
// n.x == 0.
struct Cone {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<IVec> rays;        // primitive, modulo lineality
    std::vector<IVec> lineality;   // saturated lattice basis of the lineality space
    std::vector<IVec> inequalities;
    std::vector<IVec> equations;

    bool contains(const IVec& x) const;
    bool contains(const QVec& x) const;
    // a point of the relative interior (sum of the rays; 0 for a linear space)
    IVec interior_point() const;
    std::vector<IVec> generators() const;  // rays plus +-lineality
};

Cone make_cone(std::size_t ambient_dim, const std::vector<IVec>& generators,
               const std::vector<IVec>& lineality = {});

bool cone_equal(const Cone& a, const Cone& b);
bool cone_contains_cone(const Cone& outer, const Cone& inner);
Cone cone_intersection(const Cone& a, const Cone& b);

// Pure-dimensional weighted fan; weights may be negative (formal differences
// of fans are first-class).
struct WeightedFan {
    std::size_t ambient_dim = 0;
    std::size_t dim = 0;
    std::vector<std::pair<Cone, Int>> cells;
};

// Normal cone of each face of conv(A) (max convention: the cone of
// functionals maximized on the face), paired with the face.
std::vector<std::pair<Face, Cone>> normal_cones(const SupportSet& a);

// Maximal cones (one per vertex), weight 1.
WeightedFan normal_fan(const SupportSet& a);
// All dimension-k normal cones, weight 1.
WeightedFan normal_skeleton(const SupportSet& a, std::size_t k);

// The tropical fan [P]: normal cones of the edges of conv(A), weighted by
// lattice edge length.  A point has an empty dual fan.
WeightedFan dual_fan(const SupportSet& a);

// All of R^n with weight 1: the identity of the stable intersection ring.
WeightedFan fundamental_fan(std::size_t n);

// Formal linear combinations and cleanup (merge equal cones, drop zeros).
WeightedFan fan_sum(const WeightedFan& a, const WeightedFan& b);
WeightedFan fan_scale(const WeightedFan& a, const Int& c);
WeightedFan normalize_fan(const WeightedFan& a);

// Stable intersection via the fan displacement rule with a deterministic
// generic displacement vector; weights carry the lattice index
// [Z^n : Z_sigma + Z_tau].
WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g);

// Every nonzero-weight cell of f lies inside a cone of the normal fan of
// conv(A) of dimension <= dim(f).
bool is_compatible(const SupportSet& a, const WeightedFan& f);

// Balancing around every ridge: weighted primitive quotient directions sum
// to zero.
bool is_balanced(const WeightedFan& f);

// Total weight of a fan (sum over cells).
Int total_weight(const WeightedFan& f);

}  // namespace bkk
