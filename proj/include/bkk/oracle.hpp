#pragma once

#include <cstdint>
#include <vector>

#include "bkk/lattice.hpp"

namespace bkk {

// A concrete Laurent polynomial: one nonzero rational coefficient per support
// point, in the order the points are stored.
struct CoefficientAssignment {
    SupportSet support;
    std::vector<Rat> coeffs;
    std::uint64_t seed = 0;
};

// Deterministic pseudo-random coefficients with numerators and denominators
// bounded by 10^6, never zero.
CoefficientAssignment sample(const SupportSet& a, std::uint64_t seed);

// Partial derivative: multiply by the exponent on the axis, drop vanished
// terms, shift the remaining exponents down by one.
CoefficientAssignment derivative(const CoefficientAssignment& f, std::size_t axis);

// Coefficient-wise product with one weight per support point; zero weights
// shrink the support.
CoefficientAssignment weighted(const CoefficientAssignment& f,
                               const std::vector<Rat>& weights);

// Number of distinct roots in the punctured line / plane, by exact univariate
// arithmetic resp. Sylvester resultants run in both elimination orders.
Int count_roots_1d(const CoefficientAssignment& f);
Int count_roots_2d(const CoefficientAssignment& f, const CoefficientAssignment& g);

// The three derivative systems whose root counts the combinatorial formulas
// predict: {df = 0}; f with the partials along axes 2..n; f with the partial
// along the first axis.
enum class OracleMode { critical_df, hypersurface_s1, hypersurface_s1_first_axis };

// Builds the mode's system for two independent samples (a third breaks ties)
// and returns the agreed root count; throws OracleInconclusive otherwise.
Int count_critical_oracle(const SupportSet& a, OracleMode mode, std::uint64_t seed);

}  // namespace bkk
