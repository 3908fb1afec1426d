#pragma once

#include <cstddef>
#include <vector>

#include "bkk/lattice.hpp"

namespace bkk {

// Counts of the two critical strata of a generic polynomial supported at A:
// S^1 = {f = df/dx_2 = ... = df/dx_n = 0} and the critical points {df = 0}.
// Both are sums of e^G_A * Vol_Z G over a mode-specific family of faces G.
enum class CountMode { on_hypersurface_s1, free_critical_df };

struct CountContribution {
    SupportSet face;
    Int e = 0;       // signed Euler obstruction coefficient e^G_A
    Int volume = 0;  // lattice volume of the face in its own affine span
};

struct CountResult {
    SupportSet a;  // the support the sum was evaluated on (re-coordinatized
                   // to a basis of the group generated by A for the df mode)
    CountMode mode = CountMode::free_critical_df;
    Int count = 0;
    std::vector<CountContribution> contributing_faces;
    // index of the group generated by A inside its saturation; the critical
    // count of the original polynomial is count * saturation_index
    Int saturation_index = 1;
};

// Faces whose affine span is parallel to the first coordinate axis.
CountResult count_s1(const SupportSet& a);

// Faces whose affine span contains the origin; refuses supports containing 0
// (drop the constant term first: it does not change df).
CountResult count_df(const SupportSet& a);

// The same number through the appendix recursion: Vol A minus, over proper
// faces B whose span contains 0, the multiplicity of the toric variety along
// the B-orbit times the face sum of B taken with B's own obstruction table.
Int count_df_recursive(const SupportSet& a);

// Cayley configuration of the Lagrange multiplier function f_0 + sum l_i f_i:
// the union of e_i x A_i in Z^k x Z^n with e_0 = 0.
SupportSet cayley_support(const std::vector<SupportSet>& as);

// Number of critical points of the Lagrange function for generic f_i: the
// df count of the Cayley support (with the constant-term point removed when
// present) times its saturation index.
Int algebraic_degree(const std::vector<SupportSet>& as);

}  // namespace bkk
