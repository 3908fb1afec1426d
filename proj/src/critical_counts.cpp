#include "bkk/critical_counts.hpp"

#include <cassert>

#include "bkk/errors.hpp"
#include "bkk/matrix.hpp"
#include "bkk/polytope.hpp"
#include "bkk/toric_sing.hpp"

namespace bkk {

namespace {

std::vector<QVec> rational_rows(const std::vector<IVec>& rows) {
    std::vector<QVec> out;
    for (const auto& r : rows) out.push_back(to_rational(r));
    return out;
}

// 0 lies in the affine span iff the points span no more than their differences
bool span_contains_origin(const SupportSet& f) {
    return rank_of_rows(rational_rows(f.points)) ==
           static_cast<std::size_t>(affine_span(f).dim());
}

bool parallel_to_first_axis(const SupportSet& f) {
    AffineSpan s = affine_span(f);
    if (s.dim() == 0) return false;
    std::vector<QVec> rows = rational_rows(s.directions);
    std::size_t r = rank_of_rows(rows);
    IVec e1(f.ambient_dim, 0);
    e1[0] = 1;
    rows.push_back(to_rational(e1));
    return rank_of_rows(rows) == r;
}

// Re-coordinatizes A to a basis of the group it generates; the index of that
// group in its saturation becomes the fiber multiplicity of the pullback.
struct DfNormalized {
    SupportSet set;
    Int index = 1;
};

DfNormalized df_normalize(const SupportSet& a) {
    std::size_t n = a.ambient_dim;
    IMat m(a.points.size(), n);
    m.a = a.points;
    SmithForm sf = smith_normal_form(m);
    IVec d = sf.diagonal();

    DfNormalized out;
    out.set.ambient_dim = sf.rank;
    for (const IVec& p : a.points) {
        IVec y(n, 0);  // coordinates of p in the row basis of V^{-1}
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) y[j] += p[t] * sf.v[t][j];
        IVec x(sf.rank);
        for (std::size_t j = 0; j < n; ++j) {
            if (j >= sf.rank) {
                assert(y[j] == 0);
                continue;
            }
            assert(y[j] % d[j] == 0);
            x[j] = y[j] / d[j];
        }
        if (!out.set.contains(x)) out.set.points.push_back(std::move(x));
    }
    for (std::size_t j = 0; j < sf.rank; ++j) out.index *= d[j];
    return out;
}

// The theorem's face sum for one support with its own obstruction table.
CountResult face_sum(const SupportSet& a, CountMode mode) {
    CountResult r;
    r.a = a;
    r.mode = mode;
    ObstructionTable t = euler_obstructions(a);
    std::size_t whole = t.lattice.faces.size() - 1;
    for (std::size_t i = 0; i <= whole; ++i) {
        const SupportSet& face = t.lattice.faces[i];
        bool eligible = mode == CountMode::free_critical_df
                            ? span_contains_origin(face)
                            : parallel_to_first_axis(face);
        if (!eligible) continue;
        CountContribution c;
        c.face = face;
        c.e = t.e[i][whole];
        c.volume = lattice_volume(face);
        r.count += c.e * c.volume;
        r.contributing_faces.push_back(std::move(c));
    }
    return r;
}

}  // namespace

CountResult count_s1(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("empty support set");
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < a.points.size(); ++i)
        diffs.push_back(sub(a.points[i], a.points[0]));
    CountResult r = face_sum(a, CountMode::on_hypersurface_s1);
    r.saturation_index = diffs.empty() ? 1 : saturation_index(diffs, a.ambient_dim);
    return r;
}

CountResult count_df(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("empty support set");
    for (const IVec& p : a.points)
        if (is_zero(p))
            throw ContainsOrigin("drop the constant term before counting critical points");
    DfNormalized norm = df_normalize(a);
    CountResult r = face_sum(norm.set, CountMode::free_critical_df);
    r.saturation_index = norm.index;
    return r;
}

namespace {

// sum of e^G_B Vol G over the faces G of B whose span contains 0, taken with
// the obstruction table of B itself
Int sharp_face_value(const SupportSet& b) {
    return face_sum(b, CountMode::free_critical_df).count;
}

}  // namespace

Int count_df_recursive(const SupportSet& a) {
    if (a.points.empty()) throw MalformedInput("empty support set");
    for (const IVec& p : a.points)
        if (is_zero(p))
            throw ContainsOrigin("drop the constant term before counting critical points");
    SupportSet w = df_normalize(a).set;
    if (!span_contains_origin(w)) return 0;  // no face can qualify
    Int total = lattice_volume(w);
    FaceLattice l = face_lattice(w);
    for (std::size_t i = 0; i + 1 < l.faces.size(); ++i) {
        if (!span_contains_origin(l.faces[i])) continue;
        total -= link_volume(w, l.faces[i]) * sharp_face_value(l.faces[i]);
    }
    return total;
}

SupportSet cayley_support(const std::vector<SupportSet>& as) {
    if (as.size() < 2) throw MalformedInput("need an objective and at least one constraint");
    std::size_t k = as.size() - 1;
    std::size_t n = as[0].ambient_dim;
    SupportSet out;
    out.ambient_dim = k + n;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].points.empty()) throw MalformedInput("empty support in the Cayley family");
        if (as[i].ambient_dim != n)
            throw DimensionMismatch("Cayley supports live in different ambient spaces");
        for (const IVec& p : as[i].points) {
            IVec q(k + n, 0);
            if (i > 0) q[i - 1] = 1;
            for (std::size_t j = 0; j < n; ++j) q[k + j] = p[j];
            if (!out.contains(q)) out.points.push_back(std::move(q));
        }
    }
    return out;
}

Int algebraic_degree(const std::vector<SupportSet>& as) {
    SupportSet c = cayley_support(as);
    SupportSet trimmed;  // the constant term never enters the differential
    trimmed.ambient_dim = c.ambient_dim;
    for (const IVec& p : c.points)
        if (!is_zero(p)) trimmed.points.push_back(p);
    if (trimmed.points.empty()) return 0;
    CountResult r = count_df(trimmed);
    return r.count * r.saturation_index;
}

}  // namespace bkk
