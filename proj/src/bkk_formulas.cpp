#include "bkk/bkk_formulas.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "bkk/errors.hpp"
#include "bkk/toric_sing.hpp"

namespace bkk {

namespace {

VirtualExpr bound(const std::string& name, const SupportSet& s) {
    VirtualExpr e = VirtualExpr::symbol(name);
    e.bind(name, s);
    return e;
}

// e_n(X_1..X_k) = (-1)^{n-k} sum over positive compositions d_1+..+d_k = n of
// X_1^{d_1} ... X_k^{d_k}; zero when k > n.
VirtualExpr euler_expr(const std::vector<VirtualExpr>& xs, std::size_t n) {
    std::size_t k = xs.size();
    VirtualExpr total = VirtualExpr::constant(0);
    if (k == 0 || k > n) return total;
    std::function<void(std::size_t, std::size_t, const VirtualExpr&)> rec =
        [&](std::size_t i, std::size_t left, const VirtualExpr& prod) {
            if (i + 1 == k) {
                VirtualExpr p = prod;
                for (std::size_t j = 0; j < left; ++j) p = p * xs[i];
                total = total + p;
                return;
            }
            std::size_t reserve = k - i - 1;  // the others need at least 1 each
            for (std::size_t d = 1; d + reserve <= left; ++d) {
                VirtualExpr p = prod;
                for (std::size_t j = 0; j < d; ++j) p = p * xs[i];
                rec(i + 1, left - d, p);
            }
        };
    rec(0, n, VirtualExpr::constant(1));
    if ((n - k) % 2 == 1) total = -total;
    return total;
}

Int to_int(const Rat& r) {
    assert(r.get_den() == 1);
    return r.get_num();
}

std::vector<Int> axis_values(const SupportSet& a, std::size_t axis) {
    std::set<Int> vals;
    for (const auto& p : a.points) vals.insert(p[axis]);
    return {vals.begin(), vals.end()};
}

SupportSet minus_level(const SupportSet& a, std::size_t axis, const Int& b) {
    SupportSet r;
    r.ambient_dim = a.ambient_dim;
    for (const auto& p : a.points)
        if (p[axis] != b) r.points.push_back(p);
    return r;
}

Int d_value(const IVec& p) { return p[0] - p[1]; }

SupportSet minus_d(const SupportSet& a, const Int& b) {
    SupportSet r;
    r.ambient_dim = a.ambient_dim;
    for (const auto& p : a.points)
        if (d_value(p) != b) r.points.push_back(p);
    return r;
}

// volume in the full ambient lattice: 0 for lower-dimensional sets
Int ambient_volume(const SupportSet& a) {
    if (affine_span(a).dim() != a.ambient_dim) return 0;
    return lattice_volume(a);
}

SupportSet swap12(const SupportSet& a) {
    IMat m = IMat::identity(a.ambient_dim);
    std::swap(m[0], m[1]);
    return a.mapped(m);
}

// projection along the antiinvariant direction e1 - e2
LatticeProjection diag_projection(std::size_t n) {
    IVec d(n, 0);
    d[0] = 1;
    d[1] = -1;
    LatticeProjection proj = projection_killing({d}, n);
    proj.offset = IVec(n, 0);
    return proj;
}

// stable intersection that collapses to the empty fan when the expected
// dimension is negative (e.g. curves in a 1-dimensional ambient space)
WeightedFan tropical_mult(const WeightedFan& f, const WeightedFan& g) {
    if (f.dim + g.dim < f.ambient_dim) {
        WeightedFan r;
        r.ambient_dim = f.ambient_dim;
        return r;
    }
    return stable_intersection(f, g);
}

bool reflexive_or_false(const Polytope& p) {
    try {
        return is_reflexive(p);
    } catch (const NotFullDim&) {
        return false;
    } catch (const NotLattice&) {
        return false;
    }
}

}  // namespace

Int euler_bkk(const std::vector<SupportSet>& as, std::size_t n) {
    if (as.empty()) throw MalformedInput("need at least one support set");
    std::vector<VirtualExpr> xs;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].ambient_dim != n)
            throw DimensionMismatch("support set dimension does not match the ambient space");
        xs.push_back(bound("A" + std::to_string(i), as[i]));
    }
    return to_int(euler_expr(xs, n).evaluate(n));
}

Int euler_incremental_chain(const std::vector<SupportSet>& chain) {
    if (chain.empty()) throw MalformedInput("need at least one polytope in the chain");
    std::size_t n = chain[0].ambient_dim;
    SupportSet origin(n, {IVec(n, 0)});
    VirtualExpr prev = bound("C0", origin);
    VirtualExpr prod = VirtualExpr::constant(1);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].ambient_dim != n)
            throw DimensionMismatch("chain members live in different ambient spaces");
        VirtualExpr cur = bound("C" + std::to_string(i + 1), chain[i]);
        prod = prod * geometric_factor(cur - prev, n);
        prev = cur;
    }
    return to_int(prod.evaluate(n));
}

CriticalCISummary critical_ci_summary(const SupportSet& a) {
    std::size_t n = a.ambient_dim;
    CriticalIncremental hi = hat_incremental(a, 0);
    CriticalCISummary s;
    s.a = a;
    s.hat = hi.hat;
    SupportSet hatset = hi.hat.to_support_set();

    VirtualExpr A = bound("A", a);
    VirtualExpr H = bound("hatA", hatset);
    VirtualExpr P = bound("pt", SupportSet(n, {IVec(n, 0)}));
    s.euler_gf = to_int((geometric_factor(A - P, n) * geometric_factor(H - A, n)).evaluate(n));
    s.euler_e = to_int(euler_expr({H - A, A}, n).evaluate(n));

    Rat base = euler_expr({A, A}, n).evaluate(n);
    Rat local = base;
    for (const Int& b : axis_values(a, 0)) {
        VirtualExpr R = bound("R", minus_level(a, 0, b));
        local -= base - euler_expr({A, R}, n).evaluate(n);
    }
    s.euler_local = to_int(local);

    WeightedFan diff = fan_sum(dual_fan(hatset), fan_scale(dual_fan(a), -1));
    s.tropical = normalize_fan(tropical_mult(dual_fan(a), diff));
    s.irreducible_sufficient = shiftable_into_interior(a, hatset).has_value();
    s.calabi_yau_sufficient =
        reflexive_or_false(hi.hat) && is_compatible(hatset, s.tropical);
    return s;
}

SymmetricCISummary symmetric_ci_summary(const SupportSet& a) {
    SymmetricIncremental si = check_incremental(a);
    std::size_t n = a.ambient_dim;
    SymmetricCISummary s;
    s.a = a;
    s.d_a = si.d_a;
    s.check = si.check;
    s.reduced = si.reduced;

    SupportSet checkset = si.check.to_support_set();
    SupportSet iseg = si.i_segment.to_support_set();
    VirtualExpr A = bound("A", a);
    VirtualExpr C = bound("checkA", checkset);
    VirtualExpr I = bound("iseg", iseg);
    VirtualExpr virt = C - I.scaled(Rat(s.d_a)) - A;
    s.euler_proper = to_int(euler_expr({A, virt}, n).evaluate(n));
    s.euler_diagonal_component = to_int(euler_expr({I, A, virt}, n).evaluate(n));

    LatticeProjection proj = diag_projection(n);
    SupportSet pa = proj.apply(a);
    SupportSet pc = proj.apply(checkset);
    VirtualExpr PA = bound("pA", pa);
    VirtualExpr PC = bound("pcheckA", pc);
    s.euler_diagonal_projected = to_int(euler_expr({PA, PC - PA}, n - 1).evaluate(n - 1));

    WeightedFan diffp = fan_sum(
        dual_fan(checkset),
        fan_sum(fan_scale(dual_fan(iseg), -s.d_a), fan_scale(dual_fan(a), -1)));
    s.tropical_proper = normalize_fan(tropical_mult(dual_fan(a), diffp));
    s.tropical_diagonal = normalize_fan(tropical_mult(
        dual_fan(pa), fan_sum(dual_fan(pc), fan_scale(dual_fan(pa), -1))));

    s.condition_star_holds = condition_star(a);
    SupportSet dseg = si.i_segment.to_support_set();
    for (auto& p : dseg.points)
        for (auto& x : p) x *= s.d_a;
    s.proper_irreducible_sufficient =
        shiftable_into_interior(a.pointwise_sum(dseg), checkset).has_value();
    s.proper_calabi_yau_sufficient = reflexive_or_false(si.reduced);
    s.diagonal_irreducible_sufficient = shiftable_into_interior(pa, pc).has_value();
    s.diagonal_calabi_yau_sufficient = reflexive_or_false(hull(pc));
    return s;
}

namespace {

// The projected diagonal value e_2(pA, p check - pA): Vol pA minus the
// slicewise drops, each localized (k = 1 volume localization) over the edges
// of pA + pA that the slice removes -- the projections of the blinders.
Rat diag_localized(const SupportSet& a, const LatticeProjection& proj) {
    SupportSet pa = proj.apply(a);
    SupportSet psum = pa.pointwise_sum(pa);
    Rat total = Rat(ambient_volume(pa));
    std::set<Int> levels;
    for (const IVec& p : a.points) levels.insert(d_value(p));
    for (const Int& b : levels) {
        SupportSet pgen = proj.apply(minus_d(a, b)).pointwise_sum(pa);
        for (const Face& f : all_faces(psum)) {
            bool missing = true;
            for (const IVec& p : f.points.points)
                if (pgen.contains(p)) { missing = false; break; }
            if (!missing || f.dim != 1) continue;
            SupportSet paf = support_face(pa, f.normal);
            if (affine_span(paf).dim() < 1) continue;
            total -= Rat(lattice_volume(paf)) * link_region_volume(psum, f.points, pgen);
        }
    }
    return total;
}

}  // namespace

Int link_formulas_n3(const SupportSet& a, LinkFormulaMode which) {
    if (a.ambient_dim != 3)
        throw DimensionMismatch("the link-polygon formulas are specific to three variables");

    if (which == LinkFormulaMode::critical) {
        std::vector<Int> bs = axis_values(a, 0);
        if (bs.size() < 2) throw DegenerateAxis("first coordinate is constant on A");
        const Int &blo = bs.front(), &bhi = bs.back();
        SupportSet lo = minus_level(a, 0, blo);
        SupportSet hi = minus_level(a, 0, bhi);
        Rat total = Rat(mixed_volume({a, lo, a.pointwise_sum(lo)})) +
                    Rat(mixed_volume({a, hi, a.pointwise_sum(hi)})) -
                    2 * Rat(ambient_volume(a));
        for (const SupportSet& e : horizontal_edges(a, 0)) {
            Int b = e.points[0][0];
            if (b <= blo || b >= bhi) continue;
            total -= Rat(lattice_volume(e)) * link_region_volume(a, e, minus_level(a, 0, b));
        }
        // the displays count with the positive orientation; our e_n carries
        // the sign (-1)^{n-k}, here -1
        return to_int(-total);
    }

    SymmetricIncremental si = check_incremental(a);  // validates d and yields d_A
    LatticeProjection proj = diag_projection(3);
    if (which == LinkFormulaMode::symmetric_diag) return to_int(diag_localized(a, proj));

    // Proper part: localize e(A, check A - d I - A) slice by slice.  Each
    // slice drops MV(A,S,S), MV(A,A,S) and MV(A,I,S) for S = A+IA, and the
    // first and last drops become link volumes over the faces of S (resp. of
    // pS) that the slice removes.
    const Int& d = si.d_a;
    SupportSet ia = swap12(a);
    SupportSet sum = a.pointwise_sum(ia);
    SupportSet iseg = si.i_segment.to_support_set();
    SupportSet pa = proj.apply(a);
    SupportSet psum = proj.apply(sum);

    // base term e(A, IA - d I) in the positive orientation, via the
    // multilinear expansion over [S] = [A] + [IA]
    Rat total = Rat(mixed_volume({a, a, ia}) + mixed_volume({a, ia, ia}) -
                    d * (mixed_volume({a, a, iseg}) + 2 * mixed_volume({a, ia, iseg})) +
                    d * d * mixed_volume({a, iseg, iseg}));

    std::set<Int> levels;
    for (const IVec& p : a.points) levels.insert(d_value(p));
    for (const Int& b : levels) {
        // generators of the slice incremental: sym((A minus level b) + IA)
        SupportSet gen = minus_d(a, b).pointwise_sum(ia);
        for (const IVec& p : swap12(gen).points)
            if (!gen.contains(p)) gen.points.push_back(p);

        Rat t1 = 0;
        for (const Face& f : all_faces(sum)) {
            bool missing = true;
            for (const IVec& p : f.points.points)
                if (gen.contains(p)) { missing = false; break; }
            if (!missing || f.dim == 0) continue;
            if (f.dim >= 2)
                throw HypothesisViolated("a slice removes a face of A+IA of dimension above one");
            SupportSet af = support_face(a, f.normal);
            if (affine_span(af).dim() < 1) continue;
            t1 += Rat(lattice_volume(af)) * link_region_volume(sum, f.points, gen);
        }

        Int t2 = mixed_volume({a, a, sum}) - mixed_volume({a, a, gen});

        SupportSet pgen = proj.apply(gen);
        Rat t3 = 0;
        for (const Face& f : all_faces(psum)) {
            bool missing = true;
            for (const IVec& p : f.points.points)
                if (pgen.contains(p)) { missing = false; break; }
            if (!missing || f.dim != 1) continue;
            SupportSet paf = support_face(pa, f.normal);
            if (affine_span(paf).dim() < 1) continue;
            t3 += Rat(lattice_volume(paf)) * link_region_volume(psum, f.points, pgen);
        }

        total -= t1 - Rat(t2) - 2 * Rat(d) * t3;
    }
    return to_int(-total);  // same orientation flip as the critical display
}

Int euler_slicewise(const SupportSet& a, LinkFormulaMode which) {
    std::size_t n = a.ambient_dim;
    VirtualExpr A = bound("A", a);

    if (which == LinkFormulaMode::critical) {
        if (axis_values(a, 0).size() < 2)
            throw DegenerateAxis("first coordinate is constant on A");
        Rat base = euler_expr({A, A}, n).evaluate(n);
        Rat total = base;
        SupportSet sum = a.pointwise_sum(a);
        for (const Int& b : axis_values(sum, 0)) {
            SupportSet cut = minus_level(sum, 0, b);
            SupportSet hb = hull(cut).to_support_set();
            VirtualExpr H = bound("H", hb);
            total -= base - euler_expr({A, H - A}, n).evaluate(n);
        }
        return to_int(total);
    }

    SymmetricIncremental si = check_incremental(a);
    LatticeProjection proj = diag_projection(n);
    SupportSet iseg = si.i_segment.to_support_set();
    VirtualExpr I = bound("iseg", iseg);

    if (which == LinkFormulaMode::symmetric_diag) {
        SupportSet pa = proj.apply(a);
        VirtualExpr PA = bound("pA", pa);
        Rat base = euler_expr({PA, PA}, n - 1).evaluate(n - 1);
        Rat total = base;
        for (const auto& [b, poly] : si.check_b) {
            SupportSet pcb = proj.apply(poly.to_support_set());
            VirtualExpr PCB = bound("pCb", pcb);
            total -= base - euler_expr({PA, PCB - PA}, n - 1).evaluate(n - 1);
        }
        return to_int(total);
    }

    VirtualExpr IA = bound("IA", swap12(a));
    Rat base = euler_expr({A, IA - I.scaled(Rat(si.d_a))}, n).evaluate(n);
    Rat total = base;
    for (const auto& [b, poly] : si.check_b) {
        VirtualExpr CB = bound("Cb", poly.to_support_set());
        total -= base -
                 euler_expr({A, CB - I.scaled(Rat(si.d_a)) - A}, n).evaluate(n);
    }
    return to_int(total);
}

IrreducibilityVerdict irreducibility_bkk(const std::vector<SupportSet>& as,
                                         std::size_t n) {
    for (const auto& s : as)
        if (s.ambient_dim != n)
            throw DimensionMismatch("support set dimension does not match the ambient space");
    std::size_t k = as.size();
    IrreducibilityVerdict v;
    for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ul << i)) idx.push_back(i);
        std::size_t q = idx.size();
        if (q >= n) continue;
        std::vector<IVec> dirs;
        std::vector<SupportSet> chosen;
        for (std::size_t i : idx) {
            chosen.push_back(as[i]);
            for (std::size_t j = 1; j < as[i].points.size(); ++j)
                dirs.push_back(sub(as[i].points[j], as[i].points[0]));
        }
        std::vector<IVec> basis = saturation_basis(dirs, n);
        if (basis.size() != q) continue;  // too big to fit, or mixed volume 0
        Int mv = mixed_volume_k(chosen);
        if (mv > 1) {
            v.irreducible = false;
            v.witness = IrreducibilityWitness{idx, basis, mv};
            return v;
        }
    }
    v.irreducible = true;
    return v;
}

IdentityReport localization_locmv(const std::vector<SupportSet>& as,
                                  const std::vector<SupportSet>& bs) {
    if (as.size() != 2 || bs.size() != 2)
        throw MalformedInput("expected two supports on each side");
    for (const auto& s : {as[0], as[1], bs[0], bs[1]})
        if (s.ambient_dim != 2)
            throw DimensionMismatch("component analysis is implemented for the plane");

    IdentityReport rep;
    rep.lhs = mixed_volume(as) - mixed_volume(bs);

    auto perp = [](const IVec& w) { return IVec{-w[1], w[0]}; };
    std::vector<IVec> rays;
    auto add_rays = [&](const SupportSet& s, const SupportSet& t) {
        for (const auto& u : s.points)
            for (const auto& v : t.points) {
                IVec w = sub(u, v);
                if (is_zero(w)) continue;
                for (IVec r : {primitive(perp(w)), primitive(neg(perp(w)))})
                    if (std::find(rays.begin(), rays.end(), r) == rays.end())
                        rays.push_back(std::move(r));
            }
    };
    for (int i = 0; i < 2; ++i) {
        add_rays(as[i], as[i]);  // edge normals of A_i
        add_rays(bs[i], bs[i]);  // edge normals of B_i
        add_rays(as[i], bs[i]);  // rays where A_i and B_i may agree by accident
    }
    if (rays.empty()) {  // every support is a single point and matches its partner
        rep.rhs = 0;
        rep.equal = rep.lhs == rep.rhs;
        return rep;
    }

    // explicit Int: a deduced return type would hand back a GMP expression
    // template referencing dead temporaries
    auto cross = [](const IVec& u, const IVec& v) -> Int { return u[0] * v[1] - u[1] * v[0]; };
    auto lower_half = [](const IVec& v) {
        return v[1] < 0 || (v[1] == 0 && v[0] < 0);
    };
    std::sort(rays.begin(), rays.end(), [&](const IVec& u, const IVec& v) {
        if (lower_half(u) != lower_half(v)) return !lower_half(u);
        return cross(u, v) > 0;
    });
    std::size_t m = rays.size();
    auto mid_ray = [&](std::size_t i) {
        IVec r = add(rays[i], rays[(i + 1) % m]);
        if (is_zero(r)) r = IVec{-rays[i][1], rays[i][0]};  // opposite rays: halfplane
        return r;
    };
    auto differ = [&](const IVec& l) {
        return support_value(as[0], l) != support_value(bs[0], l) ||
               support_value(as[1], l) != support_value(bs[1], l);
    };

    std::vector<bool> sector_differ(m), ray_differ(m);
    for (std::size_t i = 0; i < m; ++i) {
        sector_differ[i] = differ(mid_ray(i));
        ray_differ[i] = differ(rays[i]);
    }

    // connected components of the differ set: sectors glued across differ rays
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!sector_differ[i] || comp[i] >= 0) continue;
        int c = ncomp++;
        std::size_t j = i;
        while (sector_differ[j] && comp[j] < 0) {  // walk counterclockwise
            comp[j] = c;
            std::size_t next = (j + 1) % m;
            if (!ray_differ[next]) break;
            j = next;
        }
        j = i;
        while (ray_differ[j]) {  // and clockwise
            std::size_t prev = (j + m - 1) % m;
            if (!sector_differ[prev] || comp[prev] >= 0) break;
            comp[prev] = c;
            j = prev;
        }
    }
    std::vector<int> ray_comp(m, -1);
    for (std::size_t i = 0; i < m; ++i)
        if (ray_differ[i])
            ray_comp[i] = sector_differ[i] ? comp[i] : comp[(i + m - 1) % m];

    Int rhs = 0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<SupportSet> blam;
        for (int i = 0; i < 2; ++i) {
            std::vector<IVec> cand;
            for (std::size_t s = 0; s < m; ++s) {
                const SupportSet& src =
                    (sector_differ[s] && comp[s] == c) ? bs[i] : as[i];
                for (const auto& p : support_face(src, mid_ray(s)).points)
                    cand.push_back(p);
            }
            SupportSet p(2, cand);
            // the candidate hull must realize the localized support function
            for (std::size_t s = 0; s < m; ++s) {
                const SupportSet& src_mid =
                    (sector_differ[s] && comp[s] == c) ? bs[i] : as[i];
                const SupportSet& src_ray = ray_comp[s] == c ? bs[i] : as[i];
                if (support_value(p, mid_ray(s)) != support_value(src_mid, mid_ray(s)) ||
                    support_value(p, rays[s]) != support_value(src_ray, rays[s]))
                    throw HypothesisViolated(
                        "no polytope realizes the localized support function");
            }
            blam.push_back(std::move(p));
        }
        rhs += mixed_volume(as) - mixed_volume(blam);
    }
    rep.rhs = rhs;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

IdentityReport localization_locvol(const std::vector<SupportSet>& a0_to_ak,
                                   const SupportSet& a) {
    if (a0_to_ak.empty()) throw MalformedInput("need the ambient support A_0");
    const SupportSet& a0 = a0_to_ak[0];
    std::size_t n = a0.ambient_dim;
    std::size_t k = a0_to_ak.size() - 1;
    if (k >= n) throw MalformedInput("need fewer auxiliary supports than the dimension");
    if (a.ambient_dim != n)
        throw DimensionMismatch("A lives in a different space than A_0");
    for (const auto& s : a0_to_ak)
        if (s.ambient_dim != n)
            throw DimensionMismatch("the supports live in different spaces");
    if (a.points.empty()) throw MalformedInput("A must be nonempty");
    for (const auto& p : a.points)
        if (!a0.contains(p)) throw HypothesisViolated("A must be a subset of A_0");

    // all supports must share the dual fan of A_0 (equal face counts suffice)
    std::size_t f0 = all_faces(a0).size();
    for (std::size_t i = 1; i <= k; ++i)
        if (all_faces(a0_to_ak[i]).size() != f0 ||
            all_faces(a0.pointwise_sum(a0_to_ak[i])).size() != f0)
            throw HypothesisViolated("the supports are not compatible");

    // faces of A_0 entirely removed by passing to A
    std::vector<std::pair<SupportSet, Cone>> removed;
    for (const auto& [face, cone] : normal_cones(a0)) {
        bool missing = true;
        for (const auto& p : face.points.points)
            if (a.contains(p)) missing = false;
        if (!missing) continue;
        if (face.dim > k)
            throw HypothesisViolated("a removed face has dimension exceeding k");
        if (face.dim == k) removed.emplace_back(face.points, cone);
    }

    std::vector<SupportSet> lhs_a0(n - k, a0), lhs_a(n - k, a);
    for (std::size_t i = 1; i <= k; ++i) {
        lhs_a0.push_back(a0_to_ak[i]);
        lhs_a.push_back(a0_to_ak[i]);
    }
    IdentityReport rep;
    rep.lhs = mixed_volume(lhs_a0) - mixed_volume(lhs_a);

    Rat rhs = 0;
    for (const auto& [q, cone] : removed) {
        Int factor = 1;
        if (k > 0) {
            IVec g = cone.interior_point();
            std::vector<SupportSet> faces;
            for (std::size_t i = 1; i <= k; ++i)
                faces.push_back(support_face(a0_to_ak[i], g));
            factor = mixed_volume_k(faces);
        }
        rhs += Rat(factor) * link_region_volume(a0, q, a);
    }
    rep.rhs = to_int(rhs);
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace bkk
