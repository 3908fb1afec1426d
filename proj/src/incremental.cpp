#include "bkk/incremental.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "bkk/errors.hpp"

namespace bkk {

namespace {

// I: swap the first two coordinates
IVec swap12(const IVec& p) {
    IVec q = p;
    std::swap(q[0], q[1]);
    return q;
}

SupportSet swap12(const SupportSet& s) {
    SupportSet r;
    r.ambient_dim = s.ambient_dim;
    for (const auto& p : s.points) r.points.push_back(swap12(p));
    return r;
}

Int d_value(const IVec& p) { return p[0] - p[1]; }

std::vector<Halfspace> full_hrep(const Polytope& p) {
    std::vector<Halfspace> hs = p.facets;
    for (const auto& e : p.span_equations) {
        hs.push_back({e.normal, e.offset});
        hs.push_back({neg(e.normal), -e.offset});
    }
    return hs;
}

Polytope intersect_polytopes(std::size_t ambient, const std::vector<Polytope>& ps) {
    std::vector<Halfspace> hs;
    for (const auto& p : ps) {
        auto h = full_hrep(p);
        hs.insert(hs.end(), h.begin(), h.end());
    }
    return from_halfspaces(ambient, hs);
}

}  // namespace

CriticalIncremental hat_incremental(const SupportSet& a, std::size_t axis) {
    if (axis >= a.ambient_dim) throw DimensionMismatch("axis out of range");
    bool constant = true;
    for (const auto& p : a.points)
        if (p[axis] != a.points[0][axis]) constant = false;
    if (constant) throw DegenerateAxis("chosen coordinate is constant on A");

    CriticalIncremental r;
    r.a = a;
    r.axis = axis;
    SupportSet sum = a.pointwise_sum(a);
    Polytope whole = hull(sum);
    std::set<Int> bs;
    for (const auto& p : sum.points) bs.insert(p[axis]);

    std::vector<Polytope> slices;
    for (const auto& b : bs) {
        SupportSet cut;
        cut.ambient_dim = a.ambient_dim;
        for (const auto& p : sum.points)
            if (p[axis] != b) cut.points.push_back(p);
        if (cut.points.empty()) continue;
        Polytope pb = hull(cut);
        if (!(pb == whole)) {
            r.contributing_b.push_back(b);
            slices.push_back(std::move(pb));
        }
    }
    if (slices.empty())
        r.hat = whole;
    else
        r.hat = intersect_polytopes(a.ambient_dim, slices);
    assert(r.hat.is_lattice());
    return r;
}

HatFaceCheck hat_face_identity(const SupportSet& a, const IVec& l, std::size_t axis) {
    HatFaceCheck c;
    CriticalIncremental inc = hat_incremental(a, axis);
    SupportSet hat_pts = inc.hat.to_support_set();
    c.lhs = hull(support_face(hat_pts, l));
    SupportSet face = support_face(a, l);
    bool constant = true;
    for (const auto& p : face.points)
        if (p[axis] != face.points[0][axis]) constant = false;
    if (constant) {
        c.degenerate = true;
        c.equal = true;  // documented convention: the hat of a flat face is empty
        return c;
    }
    c.rhs = hat_incremental(face, axis).hat;
    c.equal = (c.lhs == *c.rhs);
    return c;
}

SymmetricIncremental check_incremental(const SupportSet& a) {
    if (a.ambient_dim < 2) throw DimensionMismatch("the involution needs two coordinates");
    SymmetricIncremental r;
    r.a = a;
    bool d_constant = true;
    for (const auto& p : a.points)
        if (d_value(p) != d_value(a.points[0])) d_constant = false;
    if (d_constant) throw DenominatorUndefined("A is shiftable into {d=0}");

    Int g = 0;
    for (const auto& p : a.points) {
        Int diff = d_value(p) - d_value(a.points[0]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
    }
    r.d_a = g;

    SupportSet ia = swap12(a);
    SupportSet sum = a.pointwise_sum(ia);
    SupportSet cut;
    cut.ambient_dim = a.ambient_dim;
    for (const auto& p : sum.points)
        if (d_value(p) != 0) cut.points.push_back(p);
    assert(!cut.points.empty());
    r.check = hull(cut);

    std::set<Int> bs;
    for (const auto& p : a.points) bs.insert(d_value(p));
    for (const auto& b : bs) {
        SupportSet part;
        part.ambient_dim = a.ambient_dim;
        for (const auto& p : a.points)
            if (d_value(p) != b) part.points.push_back(p);
        SupportSet t = part.pointwise_sum(ia);
        SupportSet u = t;
        for (const auto& p : swap12(t).points)
            if (!u.contains(p)) u.points.push_back(p);
        r.check_b.emplace_back(b, hull(u));
    }

    IVec e1(a.ambient_dim, 0), e2(a.ambient_dim, 0);
    e1[0] = 1;
    e2[1] = 1;
    r.i_segment = hull(SupportSet(a.ambient_dim, {e1, e2}));
    IVec de1 = e1, de2 = e2;
    for (std::size_t i = 0; i < a.ambient_dim; ++i) {
        de1[i] *= r.d_a;
        de2[i] *= r.d_a;
    }
    Polytope dseg = hull(SupportSet(a.ambient_dim, {de1, de2}));
    r.reduced = minkowski_diff(r.check, dseg);
    // the segment must be an exact Minkowski summand
    assert(minkowski_sum(r.reduced, dseg) == r.check);
    return r;
}

std::vector<SupportSet> blinders(const SupportSet& a) {
    if (a.ambient_dim < 2) throw DimensionMismatch("the involution needs two coordinates");
    SupportSet sum = a.pointwise_sum(swap12(a));
    std::vector<Face> sum_faces = all_faces(sum);
    std::vector<SupportSet> result;
    for (const auto& e : all_faces(a)) {
        if (e.dim != 1) continue;
        // blinders live inside a level set {d = b}
        bool d_constant = true;
        for (const auto& p : e.points.points)
            if (d_value(p) != d_value(e.points.points[0])) d_constant = false;
        if (!d_constant) continue;
        SupportSet doubled = e.points.pointwise_sum(swap12(e.points));
        Polytope dh = hull(doubled);
        for (const auto& f : sum_faces) {
            if (f.dim != 1) continue;
            if (hull(f.points) == dh) {
                result.push_back(e.points);
                break;
            }
        }
    }
    return result;
}

std::vector<SupportSet> horizontal_edges(const SupportSet& a, std::size_t axis) {
    std::vector<SupportSet> result;
    for (const auto& e : all_faces(a)) {
        if (e.dim != 1) continue;
        bool constant = true;
        for (const auto& p : e.points.points)
            if (p[axis] != e.points.points[0][axis]) constant = false;
        if (constant) result.push_back(e.points);
    }
    return result;
}

bool condition_star(const SupportSet& a) {
    SymmetricIncremental inc = check_incremental(a);
    // faces of conv(S) for the I-invariant generating set S
    SupportSet ia = swap12(a);
    SupportSet sum = a.pointwise_sum(ia);
    SupportSet s;
    s.ambient_dim = a.ambient_dim;
    for (const auto& p : sum.points)
        if (d_value(p) != 0) s.points.push_back(p);
    for (const auto& f : all_faces(s)) {
        if (f.dim <= 2) continue;
        if (!(swap12(f.points) == f.points)) continue;
        // denominator of the face's generating points
        bool constant = true;
        for (const auto& p : f.points.points)
            if (d_value(p) != d_value(f.points.points[0])) constant = false;
        if (constant) throw DenominatorUndefined("symmetric face with constant d");
        Int g = 0;
        for (const auto& p : f.points.points) {
            Int diff = d_value(p) - d_value(f.points.points[0]);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), diff.get_mpz_t());
        }
        if (g != inc.d_a) return false;
    }
    return true;
}

SupportSequence support_sequence(const SupportSet& a, const std::vector<QVec>& v,
                                 const IVec& l) {
    for (const auto& vi : v)
        if (vi.size() != a.points.size())
            throw DimensionMismatch("coefficient vector length != |A|");
    SupportSequence r;
    r.a = a;
    r.v = v;
    r.l = l;

    std::vector<Int> values;
    for (const auto& p : a.points) values.push_back(dot(l, p));
    std::vector<Int> levels = values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::reverse(levels.begin(), levels.end());  // descending

    auto restricted_rank = [&](std::size_t upto, const Int& c) {
        std::vector<QVec> rows;
        for (std::size_t i = 0; i < upto; ++i) {
            QVec row;
            for (std::size_t j = 0; j < a.points.size(); ++j)
                if (values[j] >= c) row.push_back(v[i][j]);
            rows.push_back(std::move(row));
        }
        if (rows.empty() || rows[0].empty()) return std::size_t{0};
        return rank_of_rows(rows);
    };

    for (std::size_t i = 1; i <= v.size(); ++i) {
        bool found = false;
        for (const auto& c : levels) {
            if (restricted_rank(i, c) > restricted_rank(i - 1, c)) {
                r.phi.push_back(c);
                found = true;
                break;
            }
        }
        if (!found) throw DependentVectors("no level raises the rank");
    }
    return r;
}

std::vector<IVec> primitive_ray_sample(std::size_t dim, long radius) {
    std::vector<IVec> rays;
    IVec x(dim, -radius);
    while (true) {
        if (!is_zero(x)) {
            IVec p = primitive(x);
            if (p == x && std::find(rays.begin(), rays.end(), p) == rays.end())
                rays.push_back(p);
        }
        std::size_t j = 0;
        while (j < dim && x[j] == radius) {
            x[j] = -radius;
            ++j;
        }
        if (j == dim) break;
        ++x[j];
    }
    return rays;
}

std::vector<std::optional<Polytope>> detect_incrementals(const SupportSet& a,
                                                         const std::vector<QVec>& v,
                                                         const std::vector<IVec>& sample_rays) {
    std::vector<std::optional<Polytope>> result;
    std::vector<std::vector<Int>> partial(sample_rays.size());
    for (std::size_t ri = 0; ri < sample_rays.size(); ++ri) {
        SupportSequence s = support_sequence(a, v, sample_rays[ri]);
        Int acc = 0;
        for (const auto& p : s.phi) {
            acc += p;
            partial[ri].push_back(acc);
        }
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
        std::vector<Halfspace> hs;
        for (std::size_t ri = 0; ri < sample_rays.size(); ++ri)
            hs.push_back({sample_rays[ri], Rat(partial[ri][j])});
        Polytope candidate = from_halfspaces(a.ambient_dim, hs);
        bool certified = !candidate.vertices.empty();
        if (certified)
            for (std::size_t ri = 0; ri < sample_rays.size(); ++ri)
                if (support_value(candidate, sample_rays[ri]) != Rat(partial[ri][j])) {
                    certified = false;
                    break;
                }
        if (certified)
            result.emplace_back(std::move(candidate));
        else
            result.emplace_back(std::nullopt);
    }
    return result;
}

}  // namespace bkk
