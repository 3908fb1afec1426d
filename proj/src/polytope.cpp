#include "bkk/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "bkk/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bkk {

namespace {

bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Rational affine span: base point, independent direction rows, and local
// coordinates of every input point.

struct RatSpan {
    QVec base;
    std::vector<QVec> dirs;           // rows, each of ambient length
    std::vector<std::size_t> coord_rows;  // ambient coordinates forming an
                                          // invertible subsystem
    QMat solve_matrix;                // dirs restricted to coord_rows, transposed

    std::size_t dim() const { return dirs.size(); }

    QVec to_local(const QVec& p) const {
        std::size_t d = dirs.size();
        QVec rhs(d);
        for (std::size_t i = 0; i < d; ++i) rhs[i] = p[coord_rows[i]] - base[coord_rows[i]];
        auto c = solve_square(solve_matrix, rhs);
        assert(c.has_value());
        return *c;
    }

    QVec to_ambient(const QVec& local) const {
        QVec p = base;
        for (std::size_t j = 0; j < dirs.size(); ++j)
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += local[j] * dirs[j][i];
        return p;
    }
};

RatSpan rational_span(const std::vector<QVec>& pts) {
    RatSpan s;
    s.base = pts[0];
    std::vector<QVec> acc;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec d = sub(pts[i], s.base);
        acc.push_back(d);
        if (rank_of_rows(acc) == acc.size())
            s.dirs.push_back(std::move(d));
        else
            acc.pop_back();
    }
    std::size_t d = s.dirs.size(), ambient = s.base.size();
    if (d == 0) return s;
    std::vector<QVec> rows;
    for (std::size_t i = 0; i < ambient && s.coord_rows.size() < d; ++i) {
        QVec row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = s.dirs[j][i];
        rows.push_back(row);
        if (rank_of_rows(rows) == rows.size())
            s.coord_rows.push_back(i);
        else
            rows.pop_back();
    }
    assert(s.coord_rows.size() == d);
    s.solve_matrix = QMat(d, d);
    s.solve_matrix.a = rows;
    return s;
}

// Pushes a local facet normal back to an ambient primitive integer covector
// inducing the same affine function on the span (up to positive scale).
IVec ambient_normal(const RatSpan& span, const IVec& local_normal) {
    std::size_t d = span.dim(), ambient = span.base.size();
    // N = D z with Gram(D) z = local_normal, where D has the directions as
    // columns; then D^T N = local_normal as required.
    QMat gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(span.dirs[i], span.dirs[j]);
    QVec rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = Rat(local_normal[i]);
    auto z = solve_square(gram, rhs);
    assert(z.has_value());
    QVec n(ambient, 0);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < ambient; ++i) n[i] += (*z)[j] * span.dirs[j][i];
    return primitive_direction(n);
}

// ---------------------------------------------------------------------------
// Full-dimensional hull core (beneath-beyond over exact rationals).

struct TriFacet {
    std::vector<std::size_t> idx;  // d point indices, a simplex facet
    IVec normal;                   // primitive; normal.x <= offset on the hull
    Rat offset;
};

struct HullCore {
    std::vector<TriFacet> tri;
    std::vector<std::pair<IVec, Rat>> facets;  // deduped geometric facets
    std::vector<std::size_t> vertex_idx;
};

std::optional<std::pair<IVec, Rat>> facet_plane(const std::vector<QVec>& pts,
                                                const std::vector<std::size_t>& idx,
                                                std::size_t d) {
    QMat m(d - 1, d);
    for (std::size_t i = 0; i + 1 < d; ++i) m[i] = sub(pts[idx[i + 1]], pts[idx[0]]);
    auto k = kernel_basis(m);
    if (k.size() != 1) return std::nullopt;
    IVec n = primitive_direction(k[0]);
    return std::make_pair(n, dot(n, pts[idx[0]]));
}

HullCore hull_full_dim(std::size_t d, const std::vector<QVec>& pts) {
    HullCore h;
    if (d == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        h.tri.push_back({{hi}, IVec{1}, pts[hi][0]});
        h.tri.push_back({{lo}, IVec{-1}, -pts[lo][0]});
        for (const auto& t : h.tri) h.facets.emplace_back(t.normal, t.offset);
        h.vertex_idx = {lo, hi};
        if (lo == hi) h.vertex_idx = {lo};
        return h;
    }

    // initial simplex: greedily affinely independent d+1 points
    std::vector<std::size_t> simplex{0};
    std::vector<QVec> acc;
    for (std::size_t i = 1; i < pts.size() && simplex.size() < d + 1; ++i) {
        acc.push_back(sub(pts[i], pts[0]));
        if (rank_of_rows(acc) == acc.size())
            simplex.push_back(i);
        else
            acc.pop_back();
    }
    assert(simplex.size() == d + 1);
    QVec ref(d, 0);
    for (auto i : simplex)
        for (std::size_t j = 0; j < d; ++j) ref[j] += pts[i][j] / Rat(d + 1);

    auto oriented = [&](std::vector<std::size_t> idx) -> std::optional<TriFacet> {
        auto pl = facet_plane(pts, idx, d);
        if (!pl) return std::nullopt;
        auto [n, c] = *pl;
        Rat at_ref = dot(n, ref);
        if (at_ref == c) return std::nullopt;  // ref on the hyperplane: degenerate
        if (at_ref > c) {
            n = neg(n);
            c = -c;
        }
        return TriFacet{std::move(idx), std::move(n), std::move(c)};
    };

    std::vector<TriFacet> facets;
    for (std::size_t skip = 0; skip <= d; ++skip) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i <= d; ++i)
            if (i != skip) idx.push_back(simplex[i]);
        auto f = oriented(idx);
        assert(f.has_value());
        facets.push_back(std::move(*f));
    }

    std::set<std::size_t> in_simplex(simplex.begin(), simplex.end());
    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (in_simplex.count(p)) continue;
        std::vector<std::size_t> visible, hidden;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (dot(facets[f].normal, pts[p]) > facets[f].offset)
                visible.push_back(f);
            else
                hidden.push_back(f);
        }
        if (visible.empty()) continue;
        // horizon ridges: appear in exactly one visible facet
        std::map<std::vector<std::size_t>, int> ridge_count;
        for (auto f : visible)
            for (std::size_t skip = 0; skip < d; ++skip) {
                std::vector<std::size_t> ridge;
                for (std::size_t i = 0; i < d; ++i)
                    if (i != skip) ridge.push_back(facets[f].idx[i]);
                std::sort(ridge.begin(), ridge.end());
                ++ridge_count[ridge];
            }
        std::vector<TriFacet> next;
        for (auto f : hidden) next.push_back(std::move(facets[f]));
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<std::size_t> idx = ridge;
            idx.push_back(p);
            auto nf = oriented(std::move(idx));
            if (nf) next.push_back(std::move(*nf));
        }
        facets = std::move(next);
    }

    h.tri = std::move(facets);
    std::map<std::pair<IVec, Rat>, std::vector<std::size_t>> geo;
    for (const auto& t : h.tri) {
        auto& verts = geo[{t.normal, t.offset}];
        verts.insert(verts.end(), t.idx.begin(), t.idx.end());
    }
    std::set<std::size_t> candidates;
    for (const auto& t : h.tri) candidates.insert(t.idx.begin(), t.idx.end());
    for (auto& [plane, verts] : geo) h.facets.push_back(plane);
    for (auto c : candidates) {
        std::vector<QVec> tight;
        for (const auto& [plane, verts] : geo)
            if (dot(plane.first, pts[c]) == plane.second)
                tight.push_back(to_rational(plane.first));
        if (rank_of_rows(tight) == d) h.vertex_idx.push_back(c);
    }
    return h;
}

std::vector<QVec> dedupe_points(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

Polytope build_polytope(std::size_t ambient_dim, std::vector<QVec> pts) {
    if (pts.empty()) {
        Polytope p;
        p.ambient_dim = ambient_dim;
        return p;
    }
    pts = dedupe_points(std::move(pts));
    Polytope p;
    p.ambient_dim = ambient_dim;
    RatSpan span = rational_span(pts);
    p.dim = span.dim();

    // equations cutting out the affine span
    if (p.dim < ambient_dim) {
        QMat dm(span.dirs.size(), ambient_dim);
        dm.a = span.dirs;
        for (const auto& k : kernel_basis(dm)) {
            IVec n = primitive_direction(k);
            if (is_zero(n)) continue;
            p.span_equations.push_back({n, dot(n, pts[0])});
        }
    }

    if (p.dim == 0) {
        p.vertices = {pts[0]};
        return p;
    }

    std::vector<QVec> local;
    for (const auto& q : pts) local.push_back(span.to_local(q));
    HullCore h = hull_full_dim(p.dim, local);

    for (auto i : h.vertex_idx) p.vertices.push_back(pts[i]);
    std::sort(p.vertices.begin(), p.vertices.end(), lex_less);

    for (const auto& [ln, lc] : h.facets) {
        IVec n = ambient_normal(span, ln);
        Rat c = dot(n, p.vertices[0]);
        for (const auto& v : p.vertices) {
            Rat t = dot(n, v);
            if (t > c) c = t;
        }
        p.facets.push_back({std::move(n), std::move(c)});
    }
    return p;
}

Int full_dim_volume_local(const std::vector<IVec>& local, std::size_t d) {
    // triangulate from a fixed vertex over the simplicial facets
    std::vector<QVec> pts;
    for (const auto& p : local) pts.push_back(to_rational(p));
    HullCore h = hull_full_dim(d, pts);
    assert(!h.vertex_idx.empty());
    const IVec& v0 = local[h.vertex_idx[0]];
    Int vol = 0;
    for (const auto& t : h.tri) {
        if (dot(t.normal, pts[h.vertex_idx[0]]) == t.offset) continue;
        IMat m(d, d);
        for (std::size_t i = 0; i < d; ++i) m[i] = sub(local[t.idx[i]], v0);
        vol += abs(determinant(m));
    }
    return vol;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polytope members

bool Polytope::is_lattice() const {
    for (const auto& v : vertices)
        if (!is_integral(v)) return false;
    return true;
}

std::vector<IVec> Polytope::lattice_vertices() const {
    if (!is_lattice()) throw NotLattice();
    std::vector<IVec> r;
    for (const auto& v : vertices) r.push_back(to_integer(v));
    return r;
}

SupportSet Polytope::to_support_set() const { return SupportSet(ambient_dim, lattice_vertices()); }

bool Polytope::contains(const QVec& x) const {
    if (vertices.empty()) return false;
    for (const auto& e : span_equations)
        if (dot(e.normal, x) != e.offset) return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) > f.offset) return false;
    if (dim == 0) return x == vertices[0];
    return true;
}

bool Polytope::operator==(const Polytope& other) const {
    return ambient_dim == other.ambient_dim && vertices == other.vertices;
}

// ---------------------------------------------------------------------------

Polytope hull(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("hull of empty set");
    std::vector<QVec> pts;
    for (const auto& p : a.points) pts.push_back(to_rational(p));
    return build_polytope(a.ambient_dim, std::move(pts));
}

Polytope hull(std::size_t ambient_dim, std::vector<QVec> points) {
    if (points.empty()) throw MalformedInput("hull of empty set");
    return build_polytope(ambient_dim, std::move(points));
}

Polytope from_halfspaces(std::size_t ambient_dim, const std::vector<Halfspace>& hs) {
    // normalize to primitive normals, keep the tightest offset per direction
    std::map<IVec, Rat> tight;
    for (const auto& h : hs) {
        Int g = content(h.normal);
        if (g == 0) {
            if (h.offset < 0) {
                Polytope p;
                p.ambient_dim = ambient_dim;
                return p;
            }
            continue;
        }
        IVec n = primitive(h.normal);
        Rat c = h.offset / Rat(g);
        auto it = tight.find(n);
        if (it == tight.end())
            tight.emplace(std::move(n), std::move(c));
        else if (c < it->second)
            it->second = std::move(c);
    }
    std::vector<std::pair<IVec, Rat>> cons(tight.begin(), tight.end());
    std::size_t m = cons.size(), d = ambient_dim;
    std::vector<QVec> feasible;

    auto try_subset = [&](const std::vector<std::size_t>& sel) {
        QMat mat(d, d);
        QVec rhs(d);
        for (std::size_t i = 0; i < d; ++i) {
            mat[i] = to_rational(cons[sel[i]].first);
            rhs[i] = cons[sel[i]].second;
        }
        auto x = solve_square(mat, rhs);
        if (!x) return;
        for (const auto& [n, c] : cons)
            if (dot(n, *x) > c) return;
        feasible.push_back(std::move(*x));
    };
    // enumerate d-subsets
    std::vector<std::size_t> sel;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (sel.size() == d) {
            try_subset(sel);
            return;
        }
        for (std::size_t i = start; i + (d - sel.size()) <= m; ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    if (d > 0 && m >= d) rec(rec, 0);
    if (feasible.empty()) {
        Polytope p;
        p.ambient_dim = ambient_dim;
        return p;
    }
    return build_polytope(ambient_dim, std::move(feasible));
}

std::vector<IVec> hull_vertices_reference(const SupportSet& a) {
    // p is a vertex iff p not in conv(A minus p); Caratheodory: test all
    // (d+1)-simplices via barycentric coordinates
    std::size_t d = affine_span(a).dim();
    auto in_simplex = [&](const IVec& p, const std::vector<const IVec*>& simp) {
        std::size_t k = simp.size();
        QMat m(a.ambient_dim + 1, k);
        QVec rhs(a.ambient_dim + 1);
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < a.ambient_dim; ++i) m[i][j] = Rat((*simp[j])[i]);
            m[a.ambient_dim][j] = 1;
        }
        for (std::size_t i = 0; i < a.ambient_dim; ++i) rhs[i] = Rat(p[i]);
        rhs[a.ambient_dim] = 1;
        // solve the overdetermined system on an invertible row subset
        std::vector<QVec> rows;
        std::vector<std::size_t> selrows;
        for (std::size_t i = 0; i <= a.ambient_dim && selrows.size() < k; ++i) {
            QVec row = m[i];
            rows.push_back(row);
            if (rank_of_rows(rows) == rows.size())
                selrows.push_back(i);
            else
                rows.pop_back();
        }
        if (selrows.size() < k) return false;
        QMat sq(k, k);
        sq.a = rows;
        QVec srhs(k);
        for (std::size_t i = 0; i < k; ++i) srhs[i] = rhs[selrows[i]];
        auto lam = solve_square(sq, srhs);
        if (!lam) return false;
        for (const auto& l : *lam)
            if (l < 0) return false;
        // verify on all rows
        for (std::size_t i = 0; i <= a.ambient_dim; ++i) {
            Rat acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += m[i][j] * (*lam)[j];
            if (acc != rhs[i]) return false;
        }
        return true;
    };
    std::vector<IVec> verts;
    for (std::size_t p = 0; p < a.points.size(); ++p) {
        std::vector<const IVec*> others;
        for (std::size_t q = 0; q < a.points.size(); ++q)
            if (q != p) others.push_back(&a.points[q]);
        bool inside = false;
        std::vector<std::size_t> sel;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (inside) return;
            if (sel.size() == d + 1) {
                std::vector<const IVec*> simp;
                for (auto i : sel) simp.push_back(others[i]);
                if (in_simplex(a.points[p], simp)) inside = true;
                return;
            }
            for (std::size_t i = start; i < others.size() && !inside; ++i) {
                sel.push_back(i);
                self(self, i + 1);
                sel.pop_back();
            }
        };
        if (others.size() >= d + 1) rec(rec, 0);
        if (!inside) verts.push_back(a.points[p]);
    }
    return verts;
}

Int support_value(const SupportSet& a, const IVec& l) {
    Int best = dot(l, a.points[0]);
    for (const auto& p : a.points) {
        Int v = dot(l, p);
        if (v > best) best = v;
    }
    return best;
}

SupportSet support_face(const SupportSet& a, const IVec& l) {
    Int best = support_value(a, l);
    SupportSet f;
    f.ambient_dim = a.ambient_dim;
    for (const auto& p : a.points)
        if (dot(l, p) == best) f.points.push_back(p);
    return f;
}

Rat support_value(const Polytope& p, const IVec& l) {
    if (p.vertices.empty()) throw EmptyResult("support of empty polytope");
    Rat best = dot(l, p.vertices[0]);
    for (const auto& v : p.vertices) {
        Rat t = dot(l, v);
        if (t > best) best = t;
    }
    return best;
}

Int second_support_value(const SupportSet& a, const IVec& l) {
    Int best = support_value(a, l);
    bool found = false;
    Int second = 0;
    for (const auto& p : a.points) {
        Int v = dot(l, p);
        if (v == best) continue;
        if (!found || v > second) second = v;
        found = true;
    }
    if (!found) throw SecondValueUndefined();
    return second;
}

SupportSet second_support_face(const SupportSet& a, const IVec& l) {
    Int second = second_support_value(a, l);
    SupportSet f;
    f.ambient_dim = a.ambient_dim;
    for (const auto& p : a.points)
        if (dot(l, p) == second) f.points.push_back(p);
    return f;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim != q.ambient_dim) throw DimensionMismatch();
    std::vector<QVec> pts;
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) pts.push_back(add(a, b));
    return build_polytope(p.ambient_dim, std::move(pts));
}

Polytope minkowski_diff(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim != q.ambient_dim) throw DimensionMismatch();
    std::vector<Halfspace> hs;
    for (const auto& f : p.facets)
        hs.push_back({f.normal, f.offset - support_value(q, f.normal)});
    for (const auto& e : p.span_equations) {
        Rat hi = support_value(q, e.normal);
        Rat lo = -support_value(q, neg(e.normal));
        if (hi != lo) throw EmptyResult("summand thicker than the polytope's span");
        hs.push_back({e.normal, e.offset - hi});
        hs.push_back({neg(e.normal), -(e.offset - hi)});
    }
    if (p.dim == 0) {
        // p is a point: diff nonempty iff q is a translate-compatible point
        if (q.dim == 0) {
            Polytope r;
            r.ambient_dim = p.ambient_dim;
            r.dim = 0;
            r.vertices = {sub(p.vertices[0], q.vertices[0])};
            for (std::size_t i = 0; i < p.ambient_dim; ++i) {
                IVec n(p.ambient_dim, 0);
                n[i] = 1;
                r.span_equations.push_back({n, r.vertices[0][i]});
            }
            return r;
        }
        throw EmptyResult();
    }
    Polytope r = from_halfspaces(p.ambient_dim, hs);
    if (r.vertices.empty()) throw EmptyResult();
    return r;
}

Int lattice_volume(const SupportSet& a) {
    NormalizedSet n = normalize_to_span(a);
    std::size_t d = n.set.ambient_dim;
    if (d == 0) return 0;
    if (d == 1) {
        Int lo = n.set.points[0][0], hi = lo;
        for (const auto& p : n.set.points) {
            if (p[0] < lo) lo = p[0];
            if (p[0] > hi) hi = p[0];
        }
        return hi - lo;
    }
    return full_dim_volume_local(n.set.points, d);
}

Int lattice_volume(const Polytope& p) { return lattice_volume(p.to_support_set()); }

Int face_volume(const SupportSet& a) {
    NormalizedSet n = normalize_to_span(a);
    if (n.set.ambient_dim == 0) return 1;
    return lattice_volume(a);
}

Rat rational_volume(std::size_t dim, const std::vector<QVec>& points) {
    if (points.empty() || dim == 0) return 0;
    std::vector<QVec> pts = dedupe_points(points);
    if (dim == 1) {
        Rat lo = pts[0][0], hi = lo;
        for (const auto& p : pts) {
            if (p[0] < lo) lo = p[0];
            if (p[0] > hi) hi = p[0];
        }
        return hi - lo;
    }
    std::vector<QVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    if (rank_of_rows(diffs) < dim) return 0;
    HullCore h = hull_full_dim(dim, pts);
    assert(!h.vertex_idx.empty());
    const QVec& v0 = pts[h.vertex_idx[0]];
    Rat vol = 0;
    for (const auto& t : h.tri) {
        if (dot(t.normal, v0) == t.offset) continue;
        QMat m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) m[i] = sub(pts[t.idx[i]], v0);
        vol += abs(determinant(m));
    }
    return vol;
}

Int ehrhart_volume(const SupportSet& a) {
    NormalizedSet n = normalize_to_span(a);
    std::size_t d = n.set.ambient_dim;
    if (d == 0) return 0;
    std::vector<QVec> pts;
    for (const auto& p : n.set.points) pts.push_back(to_rational(p));
    HullCore h = hull_full_dim(d, pts);

    auto count_dilate = [&](long t) {
        IVec lo(d), hi(d);
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = n.set.points[0][j] * t;
            hi[j] = lo[j];
            for (const auto& p : n.set.points) {
                if (p[j] * t < lo[j]) lo[j] = p[j] * t;
                if (p[j] * t > hi[j]) hi[j] = p[j] * t;
            }
            if (lo[j] > hi[j]) std::swap(lo[j], hi[j]);
        }
        Int count = 0;
        IVec x = lo;
        while (true) {
            bool ok = true;
            for (const auto& [normal, offset] : h.facets)
                if (Rat(dot(normal, x)) > offset * Rat(t)) {
                    ok = false;
                    break;
                }
            if (ok) ++count;
            std::size_t j = 0;
            while (j < d && x[j] == hi[j]) {
                x[j] = lo[j];
                ++j;
            }
            if (j == d) break;
            ++x[j];
        }
        return count;
    };

    // top finite difference of the Ehrhart polynomial = d! * leading coeff
    Int vol = 0;
    Int binom = 1;
    for (std::size_t t = 0; t <= d; ++t) {
        Int term = binom * count_dilate(static_cast<long>(t));
        if ((d - t) % 2 == 0)
            vol += term;
        else
            vol -= term;
        binom = binom * Int(d - t) / Int(t + 1);
    }
    return vol;
}

std::vector<IVec> lattice_points(const SupportSet& a) {
    Polytope p = hull(a);
    std::size_t n = a.ambient_dim;
    IVec lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        lo[j] = a.points[0][j];
        hi[j] = lo[j];
        for (const auto& q : a.points) {
            if (q[j] < lo[j]) lo[j] = q[j];
            if (q[j] > hi[j]) hi[j] = q[j];
        }
    }
    std::vector<IVec> result;
    IVec x = lo;
    while (true) {
        if (p.contains(to_rational(x))) result.push_back(x);
        std::size_t j = 0;
        while (j < n && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++x[j];
    }
    return result;
}

namespace {

Int full_volume_ambient(const SupportSet& a) {
    NormalizedSet n = normalize_to_span(a);
    if (n.set.ambient_dim < a.ambient_dim) return 0;
    return lattice_volume(a);
}

Int mixed_volume_impl(const std::vector<SupportSet>& as, bool parallel) {
    std::size_t n = as.size();
    if (n == 0) return 0;
    for (const auto& a : as)
        if (a.ambient_dim != n) throw DimensionMismatch("mixed_volume needs n sets in dim n");
    // shrink each argument to its hull vertices first
    std::vector<SupportSet> vs;
    for (const auto& a : as) {
        Polytope h = hull(a);
        vs.push_back(h.to_support_set());
    }
    long total = (1L << n) - 1;
    Int result = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long mask = 1; mask <= total; ++mask) {
        SupportSet sum;
        bool first = true;
        int popcount = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1L << i))) continue;
            ++popcount;
            if (first) {
                sum = vs[i];
                first = false;
            } else {
                sum = sum.pointwise_sum(vs[i]);
            }
        }
        Int term = full_volume_ambient(sum);
        if ((n - popcount) % 2 != 0) term = -term;
#ifdef _OPENMP
#pragma omp critical
#endif
        result += term;
    }
    // the alternating sum polarizes the euclidean volume; with Vol_Z = n!*vol
    // every term carries an extra n!
    Int factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) factorial *= Int(i);
    assert(result % factorial == 0);
    return result / factorial;
}

}  // namespace

Int mixed_volume(const std::vector<SupportSet>& as) { return mixed_volume_impl(as, true); }

Int mixed_volume_serial(const std::vector<SupportSet>& as) { return mixed_volume_impl(as, false); }

Int mixed_volume_k(const std::vector<SupportSet>& as) {
    if (as.empty()) return 0;
    std::size_t k = as.size(), n = as[0].ambient_dim;
    if (k == n) return mixed_volume(as);
    if (k > n) throw DimensionMismatch();
    std::vector<IVec> diffs;
    for (const auto& a : as)
        for (std::size_t i = 1; i < a.points.size(); ++i)
            diffs.push_back(sub(a.points[i], a.points[0]));
    auto basis = saturation_basis(diffs, n);
    if (basis.size() < k) return 0;
    if (basis.size() > k)
        throw DimensionMismatch("arguments do not fit in a common k-plane");
    // integer coordinates of each (translated) set in the span basis
    QMat sq(k, k);
    std::vector<std::size_t> selrows;
    {
        std::vector<QVec> rows;
        for (std::size_t i = 0; i < n && selrows.size() < k; ++i) {
            QVec row(k);
            for (std::size_t j = 0; j < k; ++j) row[j] = Rat(basis[j][i]);
            rows.push_back(row);
            if (rank_of_rows(rows) == rows.size())
                selrows.push_back(i);
            else
                rows.pop_back();
        }
        sq.a = rows;
    }
    std::vector<SupportSet> local;
    for (const auto& a : as) {
        SupportSet s;
        s.ambient_dim = k;
        for (const auto& p : a.points) {
            IVec diff = sub(p, a.points[0]);
            QVec rhs(k);
            for (std::size_t i = 0; i < k; ++i) rhs[i] = Rat(diff[selrows[i]]);
            auto c = solve_square(sq, rhs);
            assert(c.has_value() && is_integral(*c));
            IVec lp = to_integer(*c);
            if (!s.contains(lp)) s.points.push_back(std::move(lp));
        }
        local.push_back(std::move(s));
    }
    return mixed_volume(local);
}

std::optional<QVec> shiftable_into_interior(const SupportSet& a, const SupportSet& b) {
    if (a.ambient_dim != b.ambient_dim) throw DimensionMismatch();
    Polytope hb = hull(b);
    if (hb.dim < hb.ambient_dim) return std::nullopt;
    std::vector<Halfspace> hs;
    for (const auto& f : hb.facets)
        hs.push_back({f.normal, f.offset - Rat(support_value(a, f.normal))});
    Polytope d = from_halfspaces(b.ambient_dim, hs);
    if (d.vertices.empty() || d.dim < d.ambient_dim) return std::nullopt;
    QVec t(d.ambient_dim, 0);
    for (const auto& v : d.vertices)
        for (std::size_t i = 0; i < t.size(); ++i)
            t[i] += v[i] / Rat(static_cast<long>(d.vertices.size()));
    // the centroid of a full-dimensional polytope's vertices is interior
    for (const auto& h : hs) assert(dot(h.normal, t) < h.offset);
    return t;
}

std::vector<Face> all_faces(const SupportSet& a) {
    Polytope h = hull(a);
    std::vector<Face> result;
    Face whole;
    whole.points = a;
    whole.normal = IVec(a.ambient_dim, 0);
    whole.dim = h.dim;
    result.push_back(whole);
    if (h.dim == 0) return result;

    // facet point-subsets, then closure under intersection
    using IdxSet = std::vector<std::size_t>;
    std::map<IdxSet, std::vector<std::size_t>> tight_facets;  // face -> facet list
    for (std::size_t f = 0; f < h.facets.size(); ++f) {
        IdxSet s;
        for (std::size_t i = 0; i < a.points.size(); ++i)
            if (Rat(dot(h.facets[f].normal, a.points[i])) == h.facets[f].offset)
                s.push_back(i);
        tight_facets[s].push_back(f);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<IdxSet, std::vector<std::size_t>>> items(tight_facets.begin(),
                                                                       tight_facets.end());
        for (std::size_t x = 0; x < items.size(); ++x)
            for (std::size_t y = x + 1; y < items.size(); ++y) {
                IdxSet inter;
                std::set_intersection(items[x].first.begin(), items[x].first.end(),
                                      items[y].first.begin(), items[y].first.end(),
                                      std::back_inserter(inter));
                if (inter.empty() || tight_facets.count(inter)) continue;
                std::vector<std::size_t> fl;
                std::set_union(items[x].second.begin(), items[x].second.end(),
                               items[y].second.begin(), items[y].second.end(),
                               std::back_inserter(fl));
                tight_facets.emplace(std::move(inter), std::move(fl));
                grew = true;
            }
    }
    for (auto& [idx, fl] : tight_facets) {
        Face face;
        face.points.ambient_dim = a.ambient_dim;
        for (auto i : idx) face.points.points.push_back(a.points[i]);
        IVec l(a.ambient_dim, 0);
        std::set<std::size_t> fset(fl.begin(), fl.end());
        for (auto f : fset) l = add(l, h.facets[f].normal);
        face.normal = std::move(l);
        face.dim = affine_span(face.points).dim();
        // the summed functional must cut out exactly this face
        assert(support_face(a, face.normal) == face.points);
        result.push_back(std::move(face));
    }
    return result;
}

}  // namespace bkk
