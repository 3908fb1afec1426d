#include "bkk/fans.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "bkk/errors.hpp"

namespace bkk {

namespace {

std::vector<QVec> to_qrows(const std::vector<IVec>& rows) {
    std::vector<QVec> r;
    for (const auto& v : rows) r.push_back(to_rational(v));
    return r;
}

std::size_t rank_of(const std::vector<IVec>& rows) {
    return rank_of_rows(to_qrows(rows));
}

// saturated lattice basis of the common kernel of the given rows
std::vector<IVec> integer_kernel(const std::vector<IVec>& rows, std::size_t n) {
    std::vector<IVec> gens;
    for (const auto& k : kernel_basis_int(rows, n)) gens.push_back(primitive_direction(k));
    return saturation_basis(gens, n);
}

// v in cone(gens)?  Caratheodory: some independent subset of size <= n gives
// a nonnegative combination.
bool in_generated_cone(const IVec& v, const std::vector<IVec>& gens, std::size_t n) {
    if (is_zero(v)) return true;
    std::vector<std::size_t> sel;
    bool found = false;
    auto attempt = [&]() {
        std::vector<QVec> rows;
        for (auto i : sel) rows.push_back(to_rational(gens[i]));
        if (rank_of_rows(rows) != sel.size()) return;
        // solve sum lambda_i g_i = v on an independent column subset
        std::size_t k = sel.size();
        std::vector<QVec> cols;  // rows of the transposed system
        std::vector<std::size_t> selcoord;
        {
            std::vector<QVec> acc;
            for (std::size_t c = 0; c < n && selcoord.size() < k; ++c) {
                QVec row(k);
                for (std::size_t j = 0; j < k; ++j) row[j] = Rat(gens[sel[j]][c]);
                acc.push_back(row);
                if (rank_of_rows(acc) == acc.size())
                    selcoord.push_back(c);
                else
                    acc.pop_back();
            }
            cols = acc;
        }
        QMat sq(k, k);
        sq.a = cols;
        QVec rhs(k);
        for (std::size_t i = 0; i < k; ++i) rhs[i] = Rat(v[selcoord[i]]);
        auto lam = solve_square(sq, rhs);
        if (!lam) return;
        for (const auto& l : *lam)
            if (l < 0) return;
        // verify on every coordinate
        for (std::size_t c = 0; c < n; ++c) {
            Rat acc = 0;
            for (std::size_t j = 0; j < k; ++j) acc += (*lam)[j] * Rat(gens[sel[j]][c]);
            if (acc != Rat(v[c])) return;
        }
        found = true;
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (found) return;
        if (!sel.empty()) attempt();
        if (found || sel.size() == n) return;
        for (std::size_t i = start; i < gens.size() && !found; ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

}  // namespace

bool Cone::contains(const IVec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& h : inequalities)
        if (dot(h, x) > 0) return false;
    return true;
}

bool Cone::contains(const QVec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& h : inequalities)
        if (dot(h, x) > 0) return false;
    return true;
}

IVec Cone::interior_point() const {
    IVec p(ambient_dim, 0);
    for (const auto& r : rays) p = add(p, r);
    return p;
}

std::vector<IVec> Cone::generators() const {
    std::vector<IVec> g = rays;
    for (const auto& l : lineality) {
        g.push_back(l);
        g.push_back(neg(l));
    }
    return g;
}

Cone make_cone(std::size_t ambient_dim, const std::vector<IVec>& generators,
               const std::vector<IVec>& lineality) {
    Cone c;
    c.ambient_dim = ambient_dim;
    std::vector<IVec> pts{IVec(ambient_dim, 0)};
    for (const auto& g : generators)
        if (!is_zero(g)) pts.push_back(primitive(g));
    for (const auto& l : lineality) {
        if (is_zero(l)) continue;
        pts.push_back(primitive(l));
        pts.push_back(primitive(neg(l)));
    }
    SupportSet s(ambient_dim, pts);
    Polytope h = hull(s);
    c.dim = h.dim;
    for (const auto& e : h.span_equations) {
        assert(e.offset == 0);
        c.equations.push_back(e.normal);
    }
    for (const auto& f : h.facets)
        if (f.offset == 0) c.inequalities.push_back(f.normal);

    std::vector<IVec> all_constraints = c.equations;
    all_constraints.insert(all_constraints.end(), c.inequalities.begin(),
                           c.inequalities.end());
    c.lineality = integer_kernel(all_constraints, ambient_dim);
    std::size_t lin_dim = c.lineality.size();

    // extreme rays: generators whose minimal face has dimension lin_dim + 1
    std::set<std::vector<std::size_t>> seen_faces;
    for (const auto& p : s.points) {
        if (is_zero(p)) continue;
        bool in_lin = true;
        for (const auto& h2 : c.inequalities)
            if (dot(h2, p) != 0) in_lin = false;
        if (in_lin) continue;
        std::vector<IVec> tight = c.equations;
        std::vector<std::size_t> face_key;
        for (std::size_t i = 0; i < c.inequalities.size(); ++i)
            if (dot(c.inequalities[i], p) == 0) {
                tight.push_back(c.inequalities[i]);
                face_key.push_back(i);
            }
        if (ambient_dim - rank_of(tight) != lin_dim + 1) continue;
        if (!seen_faces.insert(face_key).second) continue;
        c.rays.push_back(p);
    }
    return c;
}

bool cone_contains_cone(const Cone& outer, const Cone& inner) {
    for (const auto& g : inner.generators())
        if (!outer.contains(g)) return false;
    return true;
}

bool cone_equal(const Cone& a, const Cone& b) {
    return a.dim == b.dim && cone_contains_cone(a, b) && cone_contains_cone(b, a);
}

Cone cone_intersection(const Cone& a, const Cone& b) {
    assert(a.ambient_dim == b.ambient_dim);
    std::size_t n = a.ambient_dim;
    std::vector<IVec> eqs = a.equations, ineqs = a.inequalities;
    eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
    ineqs.insert(ineqs.end(), b.inequalities.begin(), b.inequalities.end());

    auto inside = [&](const IVec& x) {
        for (const auto& e : eqs)
            if (dot(e, x) != 0) return false;
        for (const auto& h : ineqs)
            if (dot(h, x) > 0) return false;
        return true;
    };

    std::vector<IVec> all = eqs;
    all.insert(all.end(), ineqs.begin(), ineqs.end());
    std::vector<IVec> lin = integer_kernel(all, n);
    std::size_t lin_dim = lin.size();

    // candidate rays: pick inequality subsets whose tight locus (with the
    // equations) has dimension lin_dim + 1
    std::vector<IVec> rays;
    std::vector<std::size_t> sel;
    auto consider = [&]() {
        std::vector<IVec> tight = eqs;
        for (auto i : sel) tight.push_back(ineqs[i]);
        auto kern = kernel_basis_int(tight, n);
        if (kern.size() != lin_dim + 1) return;
        // a direction in the kernel outside the lineality space
        std::vector<QVec> lin_rows = to_qrows(lin);
        for (const auto& kv : kern) {
            std::vector<QVec> test = lin_rows;
            test.push_back(kv);
            if (rank_of_rows(test) != lin_dim + 1) continue;
            IVec d = primitive_direction(kv);
            if (inside(d))
                rays.push_back(d);
            else if (inside(neg(d)))
                rays.push_back(neg(d));
            break;
        }
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
        consider();
        if (sel.size() == n) return;
        for (std::size_t i = start; i < ineqs.size(); ++i) {
            sel.push_back(i);
            self(self, i + 1);
            sel.pop_back();
        }
    };
    rec(rec, 0);
    return make_cone(n, rays, lin);
}

std::vector<std::pair<Face, Cone>> normal_cones(const SupportSet& a) {
    Polytope h = hull(a);
    std::vector<IVec> lin;
    for (const auto& e : h.span_equations) lin.push_back(e.normal);
    std::vector<std::pair<Face, Cone>> result;
    for (auto& face : all_faces(a)) {
        std::vector<IVec> gens;
        for (const auto& f : h.facets) {
            bool tight = true;
            for (const auto& p : face.points.points)
                if (Rat(dot(f.normal, p)) != f.offset) {
                    tight = false;
                    break;
                }
            if (tight) gens.push_back(f.normal);
        }
        Cone c = make_cone(a.ambient_dim, gens, lin);
        result.emplace_back(std::move(face), std::move(c));
    }
    return result;
}

WeightedFan normal_fan(const SupportSet& a) {
    WeightedFan f;
    f.ambient_dim = a.ambient_dim;
    f.dim = a.ambient_dim;
    for (auto& [face, cone] : normal_cones(a))
        if (face.dim == 0) f.cells.emplace_back(std::move(cone), 1);
    return f;
}

WeightedFan normal_skeleton(const SupportSet& a, std::size_t k) {
    WeightedFan f;
    f.ambient_dim = a.ambient_dim;
    f.dim = k;
    for (auto& [face, cone] : normal_cones(a))
        if (cone.dim == k) f.cells.emplace_back(std::move(cone), 1);
    return f;
}

WeightedFan dual_fan(const SupportSet& a) {
    WeightedFan f;
    f.ambient_dim = a.ambient_dim;
    f.dim = a.ambient_dim == 0 ? 0 : a.ambient_dim - 1;
    for (auto& [face, cone] : normal_cones(a))
        if (face.dim == 1) f.cells.emplace_back(std::move(cone), lattice_volume(face.points));
    return f;
}

WeightedFan fundamental_fan(std::size_t n) {
    WeightedFan f;
    f.ambient_dim = n;
    f.dim = n;
    f.cells.emplace_back(make_cone(n, {}, IMat::identity(n).a), 1);
    return f;
}

WeightedFan normalize_fan(const WeightedFan& a) {
    WeightedFan f;
    f.ambient_dim = a.ambient_dim;
    f.dim = a.dim;
    for (const auto& [cone, w] : a.cells) {
        if (w == 0) continue;
        bool merged = false;
        for (auto& [c2, w2] : f.cells)
            if (cone_equal(cone, c2)) {
                w2 += w;
                merged = true;
                break;
            }
        if (!merged) f.cells.emplace_back(cone, w);
    }
    f.cells.erase(std::remove_if(f.cells.begin(), f.cells.end(),
                                 [](const auto& cw) { return cw.second == 0; }),
                  f.cells.end());
    return f;
}

WeightedFan fan_sum(const WeightedFan& a, const WeightedFan& b) {
    if (a.ambient_dim != b.ambient_dim || a.dim != b.dim) throw DimensionMismatch();
    WeightedFan f = a;
    f.cells.insert(f.cells.end(), b.cells.begin(), b.cells.end());
    return normalize_fan(f);
}

WeightedFan fan_scale(const WeightedFan& a, const Int& c) {
    WeightedFan f = a;
    for (auto& [cone, w] : f.cells) w *= c;
    return normalize_fan(f);
}

WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g) {
    if (f.ambient_dim != g.ambient_dim) throw DimensionMismatch();
    std::size_t n = f.ambient_dim;
    if (f.dim + g.dim < n) throw DimensionMismatch("codimensions exceed the ambient dimension");
    std::size_t out_dim = f.dim + g.dim - n;

    // deterministic generic displacement: v = (1, t, t^2, ...) with t chosen
    // so v avoids every hyperplane spanned by generators of the input cells
    std::vector<IVec> gens;
    for (const auto* fan : {&f, &g})
        for (const auto& [cone, w] : fan->cells)
            for (const auto& x : cone.generators())
                if (std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
    IVec v(n);
    for (long t : {997L, 1009L, 10007L, 100003L, 1000003L}) {
        Int p = 1;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = p;
            p *= t;
        }
        bool generic = true;
        std::vector<std::size_t> sel;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (!generic) return;
            if (sel.size() + 1 == n || (n == 1 && sel.empty())) {
                std::vector<QVec> rows;
                for (auto i : sel) rows.push_back(to_rational(gens[i]));
                std::size_t r = rank_of_rows(rows);
                rows.push_back(to_rational(v));
                if (rank_of_rows(rows) == r) generic = false;
                return;
            }
            for (std::size_t i = start; i < gens.size() && generic; ++i) {
                sel.push_back(i);
                self(self, i + 1);
                sel.pop_back();
            }
        };
        if (n > 1) rec(rec, 0);
        if (generic) break;
    }

    WeightedFan out;
    out.ambient_dim = n;
    out.dim = out_dim;
    for (const auto& [sigma, w1] : f.cells) {
        if (w1 == 0) continue;
        for (const auto& [tau, w2] : g.cells) {
            if (w2 == 0) continue;
            // meet test: v in tau - sigma
            std::vector<IVec> diff_gens = tau.generators();
            for (const auto& x : sigma.generators()) diff_gens.push_back(neg(x));
            if (!in_generated_cone(v, diff_gens, n)) continue;
            Cone meet = cone_intersection(sigma, tau);
            assert(meet.dim == out_dim);
            std::vector<IVec> lattice_gens = saturation_basis(sigma.generators(), n);
            for (const auto& b : saturation_basis(tau.generators(), n))
                lattice_gens.push_back(b);
            Int index = saturation_index(lattice_gens, n);
            out.cells.emplace_back(std::move(meet), w1 * w2 * index);
        }
    }
    return normalize_fan(out);
}

bool is_compatible(const SupportSet& a, const WeightedFan& f) {
    auto cones = normal_cones(a);
    for (const auto& [cell, w] : f.cells) {
        if (w == 0) continue;
        bool covered = false;
        for (const auto& [face, cone] : cones)
            if (cone.dim <= f.dim && cone_contains_cone(cone, cell)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

Int total_weight(const WeightedFan& f) {
    Int t = 0;
    for (const auto& [cone, w] : f.cells) t += w;
    return t;
}

bool is_balanced(const WeightedFan& fan) {
    WeightedFan f = normalize_fan(fan);
    std::size_t n = f.ambient_dim;
    // collect ridges (facets of cells) grouped by equality
    struct RidgeData {
        Cone ridge;
        std::vector<std::size_t> cells;
    };
    std::vector<RidgeData> ridges;
    for (std::size_t ci = 0; ci < f.cells.size(); ++ci) {
        const Cone& cell = f.cells[ci].first;
        for (const auto& h : cell.inequalities) {
            std::vector<IVec> tight_rays;
            for (const auto& r : cell.rays)
                if (dot(h, r) == 0) tight_rays.push_back(r);
            Cone ridge = make_cone(n, tight_rays, cell.lineality);
            if (ridge.dim + 1 != cell.dim) continue;
            bool foundr = false;
            for (auto& rd : ridges)
                if (cone_equal(rd.ridge, ridge)) {
                    rd.cells.push_back(ci);
                    foundr = true;
                    break;
                }
            if (!foundr) ridges.push_back({std::move(ridge), {ci}});
        }
    }
    for (const auto& rd : ridges) {
        auto span_basis = saturation_basis(rd.ridge.generators(), n);
        LatticeProjection pi = projection_killing(span_basis, n);
        IVec sum(pi.target_dim(), 0);
        for (auto ci : rd.cells) {
            const Cone& cell = f.cells[ci].first;
            // image of the cell's span lattice is rank one; find its generator
            std::vector<IVec> images;
            for (const auto& b : saturation_basis(cell.generators(), n)) {
                IVec im = pi.apply(b);
                if (!is_zero(im)) images.push_back(im);
            }
            assert(!images.empty());
            IVec p = primitive(images[0]);
            Int gcd_c = 0;
            for (const auto& im : images) {
                // im = c * p; read c off the first nonzero coordinate of p
                std::size_t j = 0;
                while (p[j] == 0) ++j;
                assert(im[j] % p[j] == 0);
                Int cval = im[j] / p[j];
                mpz_gcd(gcd_c.get_mpz_t(), gcd_c.get_mpz_t(), cval.get_mpz_t());
            }
            IVec u(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) u[i] = gcd_c * p[i];
            // orient away from the ridge
            IVec side = pi.apply(cell.interior_point());
            if (dot(side, u) < 0) u = neg(u);
            for (std::size_t i = 0; i < u.size(); ++i) sum[i] += f.cells[ci].second * u[i];
        }
        if (!is_zero(sum)) return false;
    }
    return true;
}

}  // namespace bkk
