#pragma once

#include <cstddef>
#include <vector>

#include "bkk/matrix.hpp"
#include "bkk/numeric.hpp"

namespace bkk {

// A finite, duplicate-free set of lattice points; the universal input of the
// whole toolkit.  Points keep the order in which they were first seen.
struct SupportSet {
    std::size_t ambient_dim = 0;
    std::vector<IVec> points;

    SupportSet() = default;
    SupportSet(std::size_t dim, std::vector<IVec> pts);

    bool contains(const IVec& p) const;
    std::size_t size() const { return points.size(); }

    SupportSet translated(const IVec& t) const;
    // Pointwise Minkowski sum {a + b}.
    SupportSet pointwise_sum(const SupportSet& other) const;
    SupportSet mapped(const IMat& m) const;  // applies p -> m p

    bool operator==(const SupportSet& other) const;
};

// Affine span of a lattice set: base point plus an integer basis of the
// saturated direction sublattice.
struct AffineSpan {
    IVec base;
    std::vector<IVec> directions;  // basis of a saturated sublattice
    std::size_t dim() const { return directions.size(); }
};

// A surjective affine map Z^source -> Z^target, x -> matrix * (x - offset).
struct LatticeProjection {
    IMat matrix;
    IVec offset;

    IVec apply(const IVec& x) const { return matvec(matrix, sub(x, offset)); }
    QVec apply(const QVec& x) const;
    SupportSet apply(const SupportSet& s) const;
    std::size_t source_dim() const { return matrix.cols; }
    std::size_t target_dim() const { return matrix.rows; }
};

// Basis of the saturation of the sublattice spanned by the given vectors.
std::vector<IVec> saturation_basis(const std::vector<IVec>& vectors, std::size_t dim);

// Index of the sublattice generated by `vectors` inside its saturation
// (product of the nontrivial Smith diagonal entries); 1 for the zero lattice.
Int saturation_index(const std::vector<IVec>& vectors, std::size_t dim);

AffineSpan affine_span(const SupportSet& a);

// Surjection Z^n -> Z^{n - rank} whose kernel is the saturation of span(B).
LatticeProjection projection_killing(const std::vector<IVec>& b, std::size_t n);

struct NormalizedSet {
    SupportSet set;   // coordinates in a lattice basis of the affine span
    AffineSpan span;  // embedding back: p -> base + sum p_i * directions[i]
};

// Rewrites A in coordinates of its own saturated affine span (dimension
// dim conv A); lattice volumes computed downstream are then normalized the
// right way for lower-dimensional configurations.
NormalizedSet normalize_to_span(const SupportSet& a);

// Coordinates of a point of the span in the span's lattice basis (the inverse
// of embed_point); the point must lie on the affine span.
IVec span_coords(const AffineSpan& span, const IVec& p);

IVec embed_point(const AffineSpan& span, const IVec& local);
QVec embed_point(const AffineSpan& span, const QVec& local);

}  // namespace bkk
