#include "bkk/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <utility>

#include "bkk/errors.hpp"
#include "bkk/matrix.hpp"
#include "bkk/polytope.hpp"

namespace bkk {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficient of x^i at index i.

using Poly = std::vector<Rat>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero_poly(const Poly& p) {
    for (const Rat& c : p)
        if (c != 0) return false;
    return true;
}

// degree of the zero polynomial is reported as -1
long degree(const Poly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<long>(i - 1);
    return -1;
}

long order_at_zero(const Poly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero_poly(a) || is_zero_poly(b)) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly differentiate(const Poly& p) {
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(r);
    return r;
}

// Euclidean division; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    long dd = degree(den);
    assert(dd >= 0);
    Poly quot;
    long dn = degree(num);
    if (dn >= dd) quot.assign(dn - dd + 1, Rat(0));
    while ((dn = degree(num)) >= dd) {
        Rat c = num[dn] / den[dd];
        quot[dn - dd] = c;
        for (long i = 0; i <= dd; ++i) num[dn - dd + i] -= c * den[i];
    }
    trim(num);
    return {std::move(quot), std::move(num)};
}

Poly monic(Poly p) {
    long d = degree(p);
    if (d < 0) return p;
    Rat lead = p[d];
    for (Rat& c : p) c /= lead;
    trim(p);
    return p;
}

Poly gcd_poly(Poly a, Poly b) {
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!is_zero_poly(b)) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a;
}

Poly squarefree_part(const Poly& p) {
    Poly g = gcd_poly(p, differentiate(p));
    if (degree(g) <= 0) return p;
    auto [q, r] = divmod(p, g);
    assert(is_zero_poly(r));
    return q;
}

Rat evaluate(const Poly& p, const Rat& t) {
    Rat v = 0;
    for (std::size_t i = p.size(); i > 0; --i) v = v * t + p[i - 1];
    return v;
}

// Exact Lagrange interpolation through (xs[i], ys[i]) with distinct nodes.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = mul(basis, Poly{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        Rat scale = ys[i] / denom;
        if (acc.size() < basis.size()) acc.resize(basis.size(), Rat(0));
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += scale * basis[k];
    }
    trim(acc);
    return acc;
}

// Distinct roots in the punctured line: degree of the squarefree part with the
// root at 0 removed.
Int count_distinct_in_torus(const Poly& p) {
    if (is_zero_poly(p)) throw OracleInconclusive("a sampled polynomial vanished identically");
    Poly s = squarefree_part(p);
    return Int(degree(s) - std::max<long>(order_at_zero(s), 0));
}

// ---------------------------------------------------------------------------
// Views of a coefficient assignment as concrete polynomials.

// Univariate polynomial of a one-dimensional support (exponents shifted so the
// minimum becomes 0; this only multiplies by a monomial, invisible in the
// torus).
Poly univariate(const CoefficientAssignment& f) {
    Int lo = f.support.points[0][0];
    Int hi = lo;
    for (const IVec& p : f.support.points) {
        lo = std::min(lo, p[0]);
        hi = std::max(hi, p[0]);
    }
    Poly r(mpz_class(hi - lo).get_ui() + 1, Rat(0));
    for (std::size_t i = 0; i < f.support.points.size(); ++i)
        r[mpz_class(f.support.points[i][0] - lo).get_ui()] = f.coeffs[i];
    return r;
}

// Coefficients in y: entry j is the x-polynomial at y^j, both exponents
// shifted to start at 0.
std::vector<Poly> coefficients_in_y(const CoefficientAssignment& f) {
    Int lox = f.support.points[0][0], loy = f.support.points[0][1];
    Int hix = lox, hiy = loy;
    for (const IVec& p : f.support.points) {
        lox = std::min(lox, p[0]);
        hix = std::max(hix, p[0]);
        loy = std::min(loy, p[1]);
        hiy = std::max(hiy, p[1]);
    }
    std::vector<Poly> out(mpz_class(hiy - loy).get_ui() + 1);
    for (std::size_t i = 0; i < f.support.points.size(); ++i) {
        const IVec& p = f.support.points[i];
        Poly& row = out[mpz_class(p[1] - loy).get_ui()];
        std::size_t e = mpz_class(p[0] - lox).get_ui();
        if (row.size() <= e) row.resize(e + 1, Rat(0));
        row[e] = f.coeffs[i];
    }
    return out;
}

CoefficientAssignment swap_axes(const CoefficientAssignment& f) {
    CoefficientAssignment g = f;
    for (IVec& p : g.support.points) std::swap(p[0], p[1]);
    return g;
}

// ---------------------------------------------------------------------------
// Sylvester resultant eliminating y, computed by exact evaluation and
// interpolation of the determinant.

long max_x_degree(const std::vector<Poly>& c) {
    long d = 0;
    for (const Poly& p : c) d = std::max(d, degree(p));
    return d;
}

Poly resultant_in_x(const std::vector<Poly>& fc, const std::vector<Poly>& gc) {
    std::size_t m = fc.size() - 1, n = gc.size() - 1;
    assert(m >= 1 && n >= 1);
    long bound = static_cast<long>(m) * max_x_degree(gc) + static_cast<long>(n) * max_x_degree(fc);
    std::vector<Rat> xs, ys;
    for (long t = 0; t <= bound; ++t) {
        QMat s(m + n, m + n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = evaluate(fc[m - j], Rat(t));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = evaluate(gc[n - j], Rat(t));
        xs.push_back(Rat(t));
        ys.push_back(determinant(s));
    }
    return interpolate(xs, ys);
}

// Resultant pipeline for one elimination order: both supports must genuinely
// involve y.  Factors dividing the y-leading or y-trailing coefficient of
// either input are spurious (they record where the Sylvester matrix degrades,
// not common roots) and are divided out before counting.
Int roots_by_elimination(const CoefficientAssignment& f, const CoefficientAssignment& g) {
    std::vector<Poly> fc = coefficients_in_y(f);
    std::vector<Poly> gc = coefficients_in_y(g);
    Poly r = resultant_in_x(fc, gc);
    if (is_zero_poly(r)) throw OracleInconclusive("resultant vanished identically");
    Poly spurious = mul(mul(fc.front(), fc.back()), mul(gc.front(), gc.back()));
    for (;;) {
        Poly h = gcd_poly(r, spurious);
        if (degree(h) <= 0) break;
        auto [q, rem] = divmod(r, h);
        assert(is_zero_poly(rem));
        r = std::move(q);
    }
    long lo = order_at_zero(r);
    if (lo > 0) r.erase(r.begin(), r.begin() + lo);
    if (degree(gcd_poly(r, differentiate(r))) > 0)
        throw OracleInconclusive("cleaned resultant is not squarefree");
    return Int(degree(r));
}

// Unimodular map sending the primitive direction w to the first basis vector.
IMat line_straightener(const IVec& w) {
    Int a, b, g;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), w[0].get_mpz_t(),
               w[1].get_mpz_t());
    assert(g == 1);
    IMat n(2, 2);
    n[0] = IVec{a, b};
    n[1] = IVec{-w[1], w[0]};
    return n;
}

CoefficientAssignment remap(const CoefficientAssignment& f, const IMat& n) {
    CoefficientAssignment g = f;
    for (IVec& p : g.support.points) p = matvec(n, p);
    return g;
}

// Split-support reduction: f depends on a single monomial t = x^w, so {f = 0}
// is the union, over the distinct roots t_i of that univariate polynomial, of
// cosets of the subtorus {t = 1}.  After a unimodular change of torus
// coordinates the cosets are {t = t_i} with coordinate s, and the number of
// solutions of g on them is read off Res_t(P, g) exactly — no genericity of
// the restricted coefficients is assumed, which matters when f and g are
// correlated (e.g. two partials of the same polynomial).
Int split_count(const CoefficientAssignment& f, const CoefficientAssignment& g, const IVec& w) {
    IMat n = line_straightener(w);
    CoefficientAssignment fm = remap(f, n);
    CoefficientAssignment gm = remap(g, n);

    // f in the new coordinates is a monomial in s times a polynomial in t
    Poly p = univariate([&] {
        CoefficientAssignment t = fm;
        t.support.ambient_dim = 1;
        for (IVec& q : t.support.points) q.resize(1);
        return t;
    }());
    Poly pf = squarefree_part(p);  // its roots, all in the punctured line

    std::vector<Poly> gt = coefficients_in_y(swap_axes(gm));  // entry i: s-poly at t^i
    if (gt.size() == 1) {
        // g does not involve t: every coset sees the same univariate in s
        return Int(degree(pf)) * count_distinct_in_torus(gt[0]);
    }
    bool s_free = true;
    for (const Poly& c : gt)
        if (degree(c) > 0) s_free = false;
    if (s_free) {
        // g is constant on each coset: value c0(t_i), zero iff t_i is a
        // common root — then the whole coset solves the system
        Poly c0;
        for (const Poly& c : gt) c0.push_back(c.empty() ? Rat(0) : c[0]);
        if (degree(gcd_poly(pf, c0)) > 0)
            throw OracleInconclusive("a coset lies entirely in the zero set");
        return 0;
    }

    // Res_t(pf, g) = lc^k * prod over roots t_i of g(t_i, s); a squarefree
    // remainder certifies that every nonzero root is a solution on exactly
    // one coset.
    std::vector<Poly> fc;
    for (const Rat& c : pf) fc.push_back(c == 0 ? Poly{} : Poly{c});
    Poly r = resultant_in_x(fc, gt);
    if (is_zero_poly(r)) throw OracleInconclusive("a coset lies entirely in the zero set");
    long lo = order_at_zero(r);
    if (lo > 0) r.erase(r.begin(), r.begin() + lo);
    if (degree(gcd_poly(r, differentiate(r))) > 0)
        throw OracleInconclusive("coset root multiplicities are ambiguous");
    return Int(degree(r));
}

Int count_common_1d(const CoefficientAssignment& f, const CoefficientAssignment& g) {
    Poly h = gcd_poly(univariate(f), univariate(g));
    if (degree(h) <= 0) return 0;
    return count_distinct_in_torus(h);
}

std::uint64_t mix_seed(std::uint64_t seed, unsigned step) {
    return seed + 0x9e3779b97f4a7c15ULL * (step + 1);
}

}  // namespace

CoefficientAssignment sample(const SupportSet& a, std::uint64_t seed) {
    if (a.points.empty()) throw MalformedInput("empty support set");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> mag(1, 1000000);
    CoefficientAssignment f;
    f.support = a;
    f.seed = seed;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        long num = mag(rng), den = mag(rng);
        if (rng() & 1) num = -num;
        Rat c(num, den);
        c.canonicalize();
        f.coeffs.push_back(std::move(c));
    }
    return f;
}

CoefficientAssignment derivative(const CoefficientAssignment& f, std::size_t axis) {
    if (axis >= f.support.ambient_dim) throw DimensionMismatch("derivative axis out of range");
    CoefficientAssignment g;
    g.support.ambient_dim = f.support.ambient_dim;
    g.seed = f.seed;
    for (std::size_t i = 0; i < f.support.points.size(); ++i) {
        const Int& w = f.support.points[i][axis];
        if (w == 0) continue;
        IVec p = f.support.points[i];
        p[axis] -= 1;
        g.support.points.push_back(std::move(p));
        g.coeffs.push_back(f.coeffs[i] * Rat(w));
    }
    return g;
}

CoefficientAssignment weighted(const CoefficientAssignment& f, const std::vector<Rat>& weights) {
    if (weights.size() != f.support.points.size())
        throw DimensionMismatch("one weight per support point required");
    CoefficientAssignment g;
    g.support.ambient_dim = f.support.ambient_dim;
    g.seed = f.seed;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) continue;
        g.support.points.push_back(f.support.points[i]);
        g.coeffs.push_back(f.coeffs[i] * weights[i]);
    }
    return g;
}

Int count_roots_1d(const CoefficientAssignment& f) {
    if (f.support.ambient_dim != 1) throw DimensionMismatch("count_roots_1d expects a line support");
    if (f.support.points.empty()) throw OracleInconclusive("equation vanished identically");
    return count_distinct_in_torus(univariate(f));
}

Int count_roots_2d(const CoefficientAssignment& f, const CoefficientAssignment& g) {
    if (f.support.ambient_dim != 2 || g.support.ambient_dim != 2)
        throw DimensionMismatch("count_roots_2d expects plane supports");
    if (f.support.points.empty() || g.support.points.empty())
        throw OracleInconclusive("equation vanished identically");
    std::size_t rf = affine_span(f.support).dim();
    std::size_t rg = affine_span(g.support).dim();
    // a nonzero monomial never vanishes in the torus
    if (rf == 0 || rg == 0) return 0;
    if (rf == 1) return split_count(f, g, affine_span(f.support).directions[0]);
    if (rg == 1) return split_count(g, f, affine_span(g.support).directions[0]);
    Int by_y = roots_by_elimination(f, g);
    Int by_x = roots_by_elimination(swap_axes(f), swap_axes(g));
    if (by_y != by_x)
        throw OracleInconclusive("elimination orders disagree on the root count");
    return by_y;
}

namespace {

Int system_count(const SupportSet& a, OracleMode mode, std::uint64_t seed) {
    CoefficientAssignment f = sample(a, seed);
    std::vector<CoefficientAssignment> eqs;
    std::size_t n = a.ambient_dim;
    switch (mode) {
        case OracleMode::critical_df:
            for (std::size_t j = 0; j < n; ++j) eqs.push_back(derivative(f, j));
            break;
        case OracleMode::hypersurface_s1:
            eqs.push_back(f);
            for (std::size_t j = 1; j < n; ++j) eqs.push_back(derivative(f, j));
            break;
        case OracleMode::hypersurface_s1_first_axis:
            eqs.push_back(f);
            eqs.push_back(derivative(f, 0));
            break;
    }
    for (const CoefficientAssignment& e : eqs)
        if (e.support.points.empty())
            throw OracleInconclusive("a derivative vanished identically");
    if (n == 1) {
        if (eqs.size() == 1) return count_roots_1d(eqs[0]);
        return count_common_1d(eqs[0], eqs[1]);
    }
    return count_roots_2d(eqs[0], eqs[1]);
}

}  // namespace

Int count_critical_oracle(const SupportSet& a, OracleMode mode, std::uint64_t seed) {
    if (a.ambient_dim < 1 || a.ambient_dim > 2)
        throw DimensionMismatch("the root-counting oracle covers dimensions 1 and 2");
    if (a.points.empty()) throw MalformedInput("empty support set");
    // two independent samples must agree; further ones break ties
    std::vector<Int> seen;
    for (unsigned step = 0; step < 6; ++step) {
        Int c;
        try {
            c = system_count(a, mode, mix_seed(seed, step));
        } catch (const OracleInconclusive&) {
            continue;
        }
        for (const Int& prev : seen)
            if (prev == c) return c;
        seen.push_back(c);
    }
    throw OracleInconclusive("no two samples agreed on the count");
}

}  // namespace bkk
