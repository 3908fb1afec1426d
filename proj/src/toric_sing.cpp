#include "bkk/toric_sing.hpp"

#include <algorithm>
#include <cassert>

#include "bkk/errors.hpp"
#include "bkk/fans.hpp"

namespace bkk {

namespace {

std::vector<IVec> sorted_points(const SupportSet& s) {
    std::vector<IVec> v = s.points;
    std::sort(v.begin(), v.end());
    return v;
}

bool subset_of(const SupportSet& small, const SupportSet& big) {
    for (const auto& p : small.points)
        if (!big.contains(p)) return false;
    return true;
}

}  // namespace

std::size_t FaceLattice::index_of(const SupportSet& f) const {
    std::vector<IVec> key = sorted_points(f);
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].points == key) return i;
    throw NotAFace("the point set is not a face");
}

bool FaceLattice::contains_face(std::size_t small, std::size_t big) const {
    return subset_of(faces[small], faces[big]);
}

FaceLattice face_lattice(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("empty support set");
    FaceLattice l;
    l.a = a;
    std::vector<std::pair<std::size_t, std::vector<IVec>>> keyed;
    for (const auto& f : all_faces(a)) keyed.emplace_back(f.dim, sorted_points(f.points));
    std::sort(keyed.begin(), keyed.end());
    for (auto& [d, pts] : keyed) {
        l.faces.push_back(SupportSet(a.ambient_dim, pts));
        l.dims.push_back(d);
    }
    return l;
}

Rat link_region_volume(const SupportSet& a, const SupportSet& q_face,
                       const SupportSet& b) {
    // locate the face among the faces of a and grab a supporting functional
    std::vector<IVec> key = sorted_points(q_face);
    const IVec* gamma = nullptr;
    std::vector<Face> faces = all_faces(a);
    for (const auto& f : faces)
        if (sorted_points(f.points) == key) {
            if (is_zero(f.normal)) throw NotAFace("Q must be a proper face of A");
            gamma = &f.normal;
            break;
        }
    if (!gamma) throw NotAFace("Q is not a face of A");

    // work in the lattice of A's own affine span
    NormalizedSet na = normalize_to_span(a);
    std::size_t d = na.set.ambient_dim;
    std::vector<IVec> local_q;
    for (const auto& p : q_face.points) local_q.push_back(span_coords(na.span, p));

    std::vector<IVec> q_dirs;
    for (std::size_t i = 1; i < local_q.size(); ++i)
        q_dirs.push_back(sub(local_q[i], local_q[0]));
    LatticeProjection proj = projection_killing(q_dirs, d);
    proj.offset = local_q[0];
    std::size_t k = proj.target_dim();
    assert(k >= 1);

    // projected generators of the cone C = R+ conv(pi A); pi(Q) = 0
    std::vector<IVec> gens;
    for (const auto& p : na.set.points) {
        IVec q = proj.apply(p);
        if (is_zero(q)) continue;
        if (std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
    }
    assert(!gens.empty());

    // the subtracted set, projected; its cone must cover C for boundedness
    std::vector<IVec> s_pts;
    for (const auto& p : b.points) {
        IVec q = proj.apply(span_coords(na.span, p));
        if (is_zero(q)) throw HypothesisViolated("B meets the affine span of Q");
        if (std::find(s_pts.begin(), s_pts.end(), q) == s_pts.end()) s_pts.push_back(q);
    }
    assert(!s_pts.empty());
    Cone cone_s = make_cone(k, s_pts);
    for (const auto& g : gens)
        if (!cone_s.contains(g)) throw HypothesisViolated("the link region is unbounded");

    // push the supporting functional to the quotient: l . M = -gamma_loc,
    // so that l is strictly positive on every generator
    QVec gamma_loc(d);
    for (std::size_t j = 0; j < d; ++j)
        gamma_loc[j] = Rat(-dot(*gamma, na.span.directions[j]));
    QMat mt(d, k);  // transpose of the projection matrix
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < d; ++j) mt[j][i] = Rat(proj.matrix[i][j]);
    std::vector<std::size_t> rows_sel;
    std::vector<QVec> acc;
    for (std::size_t i = 0; i < d && rows_sel.size() < k; ++i) {
        acc.push_back(mt[i]);
        if (rank_of_rows(acc) == acc.size())
            rows_sel.push_back(i);
        else
            acc.pop_back();
    }
    assert(rows_sel.size() == k);
    QMat sq(k, k);
    QVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        sq[i] = mt[rows_sel[i]];
        rhs[i] = gamma_loc[rows_sel[i]];
    }
    auto lr = solve_square(sq, rhs);
    assert(lr.has_value());
    IVec l = primitive_direction(*lr);
    for (const auto& g : gens) assert(dot(l, g) > 0);
    for (const auto& s : s_pts) assert(dot(l, s) > 0);

    // truncate both regions beyond every vertex of conv(pi B) + C
    Int lam = dot(l, s_pts[0]);
    for (const auto& s : s_pts) lam = std::max(lam, dot(l, s));
    lam += 1;

    std::vector<QVec> cone_pts;
    cone_pts.push_back(QVec(k, 0));
    for (const auto& g : gens) {
        QVec q(k);
        Rat scale = Rat(lam) / Rat(dot(l, g));
        for (std::size_t i = 0; i < k; ++i) q[i] = scale * Rat(g[i]);
        cone_pts.push_back(std::move(q));
    }
    std::vector<QVec> shifted_pts;
    for (const auto& s : s_pts) {
        shifted_pts.push_back(to_rational(s));
        Rat head = Rat(lam - dot(l, s));
        for (const auto& g : gens) {
            QVec q(k);
            Rat scale = head / Rat(dot(l, g));
            for (std::size_t i = 0; i < k; ++i) q[i] = Rat(s[i]) + scale * Rat(g[i]);
            shifted_pts.push_back(std::move(q));
        }
    }
    Rat vol = rational_volume(k, cone_pts) - rational_volume(k, shifted_pts);
    assert(vol >= 0);
    return vol;
}

Int link_volume(const SupportSet& a, const SupportSet& b) {
    SupportSet complement;
    complement.ambient_dim = a.ambient_dim;
    for (const auto& p : a.points)
        if (!b.contains(p)) complement.points.push_back(p);
    Rat vol = link_region_volume(a, b, complement);
    assert(vol.get_den() == 1);
    assert(vol >= 1);
    return vol.get_num();
}

ObstructionTable euler_obstructions(const SupportSet& a) {
    ObstructionTable t;
    t.lattice = face_lattice(a);
    std::size_t m = t.lattice.faces.size();
    t.c = IMat(m, m);
    t.e = IMat(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        t.c[j][j] = 1;
        for (std::size_t i = 0; i < j; ++i) {
            if (!t.lattice.contains_face(i, j)) continue;
            t.c[i][j] = link_volume(t.lattice.faces[j], t.lattice.faces[i]);
        }
    }
    // invert the unitriangular multiplicity matrix exactly
    for (std::size_t j = 0; j < m; ++j) {
        t.e[j][j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            Int s = 0;
            for (std::size_t k = i + 1; k <= j; ++k) s += t.c[i][k] * t.e[k][j];
            t.e[i][j] = -s;
        }
    }
    return t;
}

std::optional<IVec> reflexive_origin(const Polytope& p) {
    if (p.dim != p.ambient_dim) throw NotFullDim("reflexivity needs a full-dimensional polytope");
    SupportSet verts = p.to_support_set();  // throws NotLattice
    for (const auto& t : lattice_points(verts)) {
        bool interior = true;
        for (const auto& f : p.facets)
            if (Rat(dot(f.normal, t)) >= f.offset) interior = false;
        if (!interior) continue;
        bool distance_one = true;
        for (const auto& f : p.facets)
            if (f.offset - Rat(dot(f.normal, t)) != 1) distance_one = false;
        if (distance_one) return t;
    }
    return std::nullopt;
}

bool is_reflexive(const Polytope& p) { return reflexive_origin(p).has_value(); }

}  // namespace bkk
