#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bkk/fans.hpp"
#include "bkk/incremental.hpp"
#include "bkk/polytope.hpp"
#include "bkk/virtual_expr.hpp"

namespace bkk {

// Euler characteristic of a nondegenerate complete intersection with the given
// supports in Z^n: e_n = (-1)^{n-k} sum over positive compositions of n of the
// mixed-volume monomials A_1^{d_1} ... A_k^{d_k}; 0 when k > n.
Int euler_bkk(const std::vector<SupportSet>& as, std::size_t n);

// Euler characteristic from a chain of incremental polytopes A_1 .. A_k
// (A_0 = point): degree-n part of the product of X_i/(1+X_i), X_i = A_i-A_{i-1}.
// The Milnor-number correction term is fixed to 0 (smoothness assumed).
Int euler_incremental_chain(const std::vector<SupportSet>& chain);

// All combinatorial outputs for the critical system {f = df/dx_1 = 0}.
struct CriticalCISummary {
    SupportSet a;
    Polytope hat;
    // the three equivalent Euler-characteristic formulas
    Int euler_gf = 0;     // generating-function chain [A, hat A]
    Int euler_e = 0;      // e(hat A - A, A)
    Int euler_local = 0;  // e(A,A) - sum_b (e(A,A) - e(A, A minus slice b))
    WeightedFan tropical;  // [hat A][A] - [A][A]
    bool irreducible_sufficient = false;  // A shiftable into the interior of hat A
    bool calabi_yau_sufficient = false;   // hat A reflexive and compatible
    bool smoothness_assumed = true;
};

CriticalCISummary critical_ci_summary(const SupportSet& a);

// All combinatorial outputs for the symmetric system f(x1,x2,..) = f(x2,x1,..) = 0:
// the proper part and one diagonal component.
struct SymmetricCISummary {
    SupportSet a;
    Int d_a = 0;
    Polytope check;    // the symmetric incremental polytope
    Polytope reduced;  // check minus d_a times the antiinvariant segment
    Int euler_proper = 0;              // e(A, check - d_a I - A)
    Int euler_diagonal_component = 0;  // e(I, A, check - d_a I - A)
    Int euler_diagonal_projected = 0;  // e_{n-1}(pA, p check - pA), must agree
    WeightedFan tropical_proper;       // [A]([check] - d_a [I] - [A])
    WeightedFan tropical_diagonal;     // [pA]([p check] - [pA]) in Z^{n-1}
    bool condition_star_holds = false;  // the flags below need it
    bool proper_irreducible_sufficient = false;
    bool proper_calabi_yau_sufficient = false;
    bool diagonal_irreducible_sufficient = false;
    bool diagonal_calabi_yau_sufficient = false;
    bool smoothness_assumed = true;
};

SymmetricCISummary symmetric_ci_summary(const SupportSet& a);

// The three boundary-corrected Euler evaluations for A in Z^3 via link
// polygons (mode critical: e(A, hat A - A); symmetric_diag: the projected
// diagonal-component value; symmetric_proper: e(A, check - d_A I - A)).
enum class LinkFormulaMode { critical, symmetric_diag, symmetric_proper };

Int link_formulas_n3(const SupportSet& a, LinkFormulaMode which);

// The same Euler values through the slicewise localization identity
// (valid in any dimension): e = e(base) - sum_b (e(base) - e(slice b)).
Int euler_slicewise(const SupportSet& a, LinkFormulaMode which);

// Sufficient irreducibility test for a positive-dimensional complete
// intersection: reducible when some q < n of the supports fit (after shifts)
// in a common q-dimensional subspace with lattice mixed volume > 1 there.
struct IrreducibilityWitness {
    std::vector<std::size_t> subset;  // indices into the support list
    std::vector<IVec> subspace;       // basis of the common subspace
    Int mixed_volume = 0;             // > 1: the number of components
};

struct IrreducibilityVerdict {
    bool irreducible = false;
    std::optional<IrreducibilityWitness> witness;
};

IrreducibilityVerdict irreducibility_bkk(const std::vector<SupportSet>& as,
                                         std::size_t n);

// Both sides of a localization identity, evaluated independently.
struct IdentityReport {
    Int lhs = 0, rhs = 0;
    bool equal = false;
};

// Mixed-volume localization over the components where the support functions
// of the two families differ (exact component analysis implemented for n = 2).
IdentityReport localization_locmv(const std::vector<SupportSet>& as,
                                  const std::vector<SupportSet>& bs);

// Volume localization: for compatible A_0 .. A_k and A inside A_0 missing only
// faces of dimension <= k, the drop of A_0^{n-k} A_1...A_k is the sum over the
// missing k-faces Q of MV(A_1^Q,..,A_k^Q) times the link region volume.
IdentityReport localization_locvol(const std::vector<SupportSet>& a0_to_ak,
                                   const SupportSet& a);

}  // namespace bkk
