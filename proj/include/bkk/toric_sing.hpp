#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bkk/lattice.hpp"
#include "bkk/matrix.hpp"
#include "bkk/polytope.hpp"

namespace bkk {

// All faces of A (a face of conv A intersected with A), partially ordered by
// containment.  Faces are stored with lex-sorted points and listed by
// ascending dimension, so containment only goes left to right; A is last.
struct FaceLattice {
    SupportSet a;
    std::vector<SupportSet> faces;
    std::vector<std::size_t> dims;

    // index of a face given by its point set; throws NotAFace
    std::size_t index_of(const SupportSet& f) const;
    bool contains_face(std::size_t small, std::size_t big) const;
};

FaceLattice face_lattice(const SupportSet& a);

// Lattice volume of the link region [A - B/Q] = C \ (conv(pi B) + C), where
// Q is a proper face of A, pi the lattice quotient sending Q to 0, and
// C = R+ conv(pi A).  The points of B must avoid the affine span of Q, and
// the cone over pi B must cover C (else the region is unbounded and
// HypothesisViolated is thrown).
Rat link_region_volume(const SupportSet& a, const SupportSet& q_face,
                       const SupportSet& b);

// Multiplicity c^B_A of the A-toric variety along the B-orbit: the link
// region volume [A - (A\B)/B].  B must be a proper face of A.
Int link_volume(const SupportSet& a, const SupportSet& b);

// Multiplicities c and Euler obstructions e for every pair of faces; the two
// matrices are unitriangular inverses of each other.
struct ObstructionTable {
    FaceLattice lattice;
    IMat c, e;  // entry [i][j]: value of face i inside face j

    Int multiplicity(std::size_t small, std::size_t big) const { return c[small][big]; }
    Int obstruction(std::size_t small, std::size_t big) const { return e[small][big]; }
};

ObstructionTable euler_obstructions(const SupportSet& a);

// An interior lattice point t such that every facet of P - t lies at lattice
// distance 1, when one exists.  P must be a full-dimensional lattice polytope.
std::optional<IVec> reflexive_origin(const Polytope& p);
bool is_reflexive(const Polytope& p);

}  // namespace bkk
