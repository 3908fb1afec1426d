#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bkk/numeric.hpp"
#include "bkk/polytope.hpp"

namespace bkk {

// The critical incremental polytope: intersection over b of
// conv((A+A) minus the hyperplane {axis-coordinate = b}).
struct CriticalIncremental {
    SupportSet a;
    std::size_t axis = 0;
    Polytope hat;
    std::vector<Int> contributing_b;  // b where the slice actually cuts conv(A+A)
};

CriticalIncremental hat_incremental(const SupportSet& a, std::size_t axis = 0);

// Both sides of the face identity hat(A)^l == hat(A^l).  When the axis is
// constant on the support face the right-hand side is empty by convention
// (degenerate == true) and the verdict is true.
struct HatFaceCheck {
    Polytope lhs;
    std::optional<Polytope> rhs;
    bool degenerate = false;
    bool equal = false;
};

HatFaceCheck hat_face_identity(const SupportSet& a, const IVec& l, std::size_t axis = 0);

// The symmetric incremental polytope for the involution I swapping the first
// two coordinates, d = x1 - x2, and the segment S = conv{e1, e2}.
struct SymmetricIncremental {
    SupportSet a;
    Int d_a = 0;                      // gcd of pairwise differences of d(A)
    Polytope check;                   // conv((A + IA) minus {d = 0})
    std::vector<std::pair<Int, Polytope>> check_b;  // the slices, b in d(A)
    Polytope i_segment;               // conv{e1, e2}
    Polytope reduced;                 // check minus d_a * segment (Minkowski)
};

SymmetricIncremental check_incremental(const SupportSet& a);

// Edges E of conv(A) with E + IE an edge of conv(A + IA).
std::vector<SupportSet> blinders(const SupportSet& a);

// Edges of conv(A) on which the given coordinate is constant.
std::vector<SupportSet> horizontal_edges(const SupportSet& a, std::size_t axis = 0);

// For every symmetric face of the symmetric incremental polytope of dimension
// > 2, the denominator of its generating points equals d_A.
bool condition_star(const SupportSet& a);

// The support sequence phi_l: phi(i) is the maximal C such that restricting
// v_1..v_i to {a : l(a) >= C} raises the rank over v_1..v_{i-1}.
struct SupportSequence {
    SupportSet a;
    std::vector<QVec> v;  // coefficient vectors indexed like a.points
    IVec l;
    std::vector<Int> phi;
};

SupportSequence support_sequence(const SupportSet& a, const std::vector<QVec>& v,
                                 const IVec& l);

// For each j, the polytope (if any) whose support function matches
// l -> phi_l(1) + ... + phi_l(j) on every sample ray; nullopt when convexity
// fails on the tested rays.
std::vector<std::optional<Polytope>> detect_incrementals(const SupportSet& a,
                                                         const std::vector<QVec>& v,
                                                         const std::vector<IVec>& sample_rays);

// Default ray sample: all primitive vectors with coordinates in [-radius, radius].
std::vector<IVec> primitive_ray_sample(std::size_t dim, long radius);

}  // namespace bkk
