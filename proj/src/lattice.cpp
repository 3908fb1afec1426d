#include "bkk/lattice.hpp"

#include <algorithm>
#include <cassert>

#include "bkk/errors.hpp"

namespace bkk {

SupportSet::SupportSet(std::size_t dim, std::vector<IVec> pts) : ambient_dim(dim) {
    for (auto& p : pts) {
        if (p.size() != dim) throw DimensionMismatch("point dimension != ambient_dim");
        if (!contains(p)) points.push_back(std::move(p));
    }
}

bool SupportSet::contains(const IVec& p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

SupportSet SupportSet::translated(const IVec& t) const {
    SupportSet r;
    r.ambient_dim = ambient_dim;
    for (const auto& p : points) r.points.push_back(add(p, t));
    return r;
}

SupportSet SupportSet::pointwise_sum(const SupportSet& other) const {
    if (ambient_dim != other.ambient_dim)
        throw DimensionMismatch("pointwise_sum: ambient dims differ");
    SupportSet r;
    r.ambient_dim = ambient_dim;
    for (const auto& p : points)
        for (const auto& q : other.points) {
            IVec s = add(p, q);
            if (!r.contains(s)) r.points.push_back(std::move(s));
        }
    return r;
}

SupportSet SupportSet::mapped(const IMat& m) const {
    SupportSet r;
    r.ambient_dim = m.rows;
    for (const auto& p : points) {
        IVec q = matvec(m, p);
        if (!r.contains(q)) r.points.push_back(std::move(q));
    }
    return r;
}

bool SupportSet::operator==(const SupportSet& other) const {
    if (ambient_dim != other.ambient_dim || points.size() != other.points.size())
        return false;
    for (const auto& p : points)
        if (!other.contains(p)) return false;
    return true;
}

QVec LatticeProjection::apply(const QVec& x) const {
    QVec shifted(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - Rat(offset[i]);
    return matvec(matrix, shifted);
}

SupportSet LatticeProjection::apply(const SupportSet& s) const {
    SupportSet r;
    r.ambient_dim = target_dim();
    for (const auto& p : s.points) {
        IVec q = apply(p);
        if (!r.contains(q)) r.points.push_back(std::move(q));
    }
    return r;
}

namespace {

// Inverse of a unimodular integer matrix (exact, entries stay integral).
IMat unimodular_inverse(const IMat& m) {
    assert(m.rows == m.cols);
    std::size_t n = m.rows;
    QMat q(n, n);
    for (std::size_t i = 0; i < n; ++i) q[i] = to_rational(m[i]);
    IMat inv(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        QVec e(n, 0);
        e[c] = 1;
        auto x = solve_square(q, e);
        assert(x.has_value());
        for (std::size_t i = 0; i < n; ++i) {
            assert((*x)[i].get_den() == 1);
            inv[i][c] = (*x)[i].get_num();
        }
    }
    return inv;
}

// Columns of the returned matrix are the input vectors.
IMat columns_matrix(const std::vector<IVec>& vectors, std::size_t dim) {
    IMat m(dim, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        assert(vectors[j].size() == dim);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = vectors[j][i];
    }
    return m;
}

}  // namespace

std::vector<IVec> saturation_basis(const std::vector<IVec>& vectors, std::size_t dim) {
    if (vectors.empty()) return {};
    IMat n = columns_matrix(vectors, dim);
    SmithForm f = smith_normal_form(n);
    IMat uinv = unimodular_inverse(f.u);
    std::vector<IVec> basis;
    for (std::size_t j = 0; j < f.rank; ++j) {
        IVec col(dim);
        for (std::size_t i = 0; i < dim; ++i) col[i] = uinv[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

Int saturation_index(const std::vector<IVec>& vectors, std::size_t dim) {
    if (vectors.empty()) return 1;
    IMat n = columns_matrix(vectors, dim);
    SmithForm f = smith_normal_form(n);
    Int idx = 1;
    for (std::size_t i = 0; i < f.rank; ++i) idx *= f.s[i][i];
    return idx;
}

AffineSpan affine_span(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("affine_span of empty set");
    AffineSpan span;
    span.base = a.points[0];
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < a.points.size(); ++i)
        diffs.push_back(sub(a.points[i], span.base));
    span.directions = saturation_basis(diffs, a.ambient_dim);
    return span;
}

LatticeProjection projection_killing(const std::vector<IVec>& b, std::size_t n) {
    LatticeProjection p;
    p.offset = IVec(n, 0);
    if (b.empty()) {
        p.matrix = IMat::identity(n);
        return p;
    }
    IMat m = columns_matrix(b, n);
    SmithForm f = smith_normal_form(m);
    p.matrix = IMat(n - f.rank, n);
    for (std::size_t i = f.rank; i < n; ++i) p.matrix[i - f.rank] = f.u[i];
    return p;
}

NormalizedSet normalize_to_span(const SupportSet& a) {
    NormalizedSet r;
    r.span = affine_span(a);
    std::size_t d = r.span.dim();
    r.set.ambient_dim = d;
    if (d == 0) {
        r.set.points = {IVec{}};
        return r;
    }
    QMat dirs(a.ambient_dim, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < a.ambient_dim; ++i)
            dirs[i][j] = Rat(r.span.directions[j][i]);
    // solve dirs * c = p - base on a square subsystem: pick d independent
    // rows once, reuse them for every point
    std::vector<std::size_t> rows_sel;
    {
        std::vector<QVec> acc;
        for (std::size_t i = 0; i < a.ambient_dim && rows_sel.size() < d; ++i) {
            acc.push_back(dirs[i]);
            if (rank_of_rows(acc) == acc.size())
                rows_sel.push_back(i);
            else
                acc.pop_back();
        }
        assert(rows_sel.size() == d);
    }
    QMat sq(d, d);
    for (std::size_t i = 0; i < d; ++i) sq[i] = dirs[rows_sel[i]];
    for (const auto& p : a.points) {
        QVec rhs(d);
        for (std::size_t i = 0; i < d; ++i)
            rhs[i] = Rat(p[rows_sel[i]] - r.span.base[rows_sel[i]]);
        auto c = solve_square(sq, rhs);
        assert(c.has_value());
        IVec local(d);
        for (std::size_t i = 0; i < d; ++i) {
            assert((*c)[i].get_den() == 1);
            local[i] = (*c)[i].get_num();
        }
        if (!r.set.contains(local)) r.set.points.push_back(std::move(local));
    }
    return r;
}

IVec span_coords(const AffineSpan& span, const IVec& p) {
    std::size_t d = span.dim(), ambient = span.base.size();
    if (d == 0) return IVec{};
    QMat dirs(ambient, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < ambient; ++i) dirs[i][j] = Rat(span.directions[j][i]);
    std::vector<std::size_t> rows_sel;
    std::vector<QVec> acc;
    for (std::size_t i = 0; i < ambient && rows_sel.size() < d; ++i) {
        acc.push_back(dirs[i]);
        if (rank_of_rows(acc) == acc.size())
            rows_sel.push_back(i);
        else
            acc.pop_back();
    }
    assert(rows_sel.size() == d);
    QMat sq(d, d);
    for (std::size_t i = 0; i < d; ++i) sq[i] = dirs[rows_sel[i]];
    QVec rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = Rat(p[rows_sel[i]] - span.base[rows_sel[i]]);
    auto c = solve_square(sq, rhs);
    assert(c.has_value());
    IVec local(d);
    for (std::size_t i = 0; i < d; ++i) {
        assert((*c)[i].get_den() == 1);
        local[i] = (*c)[i].get_num();
    }
    assert(embed_point(span, local) == p);
    return local;
}

IVec embed_point(const AffineSpan& span, const IVec& local) {
    IVec p = span.base;
    for (std::size_t j = 0; j < span.directions.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += local[j] * span.directions[j][i];
    return p;
}

QVec embed_point(const AffineSpan& span, const QVec& local) {
    QVec p = to_rational(span.base);
    for (std::size_t j = 0; j < span.directions.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] += local[j] * Rat(span.directions[j][i]);
    return p;
}

}  // namespace bkk
