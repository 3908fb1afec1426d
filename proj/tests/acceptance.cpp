// Acceptance gate: ten independent suites, one verdict line each.  Every
// numeric claim is either a frozen value or a cross-check between two
// independently implemented evaluations.
//
// Usage: acceptance [golden_script cli_binary]

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bkk/bkk_formulas.hpp"
#include "bkk/critical_counts.hpp"
#include "bkk/errors.hpp"
#include "bkk/fans.hpp"
#include "bkk/incremental.hpp"
#include "bkk/oracle.hpp"
#include "bkk/polytope.hpp"
#include "bkk/toric_sing.hpp"

using namespace bkk;

namespace {

int g_failures_in_suite = 0;

#define CHECK(cond)                                                             \
    do {                                                                        \
        if (!(cond)) {                                                          \
            ++g_failures_in_suite;                                              \
            if (g_failures_in_suite <= 3)                                       \
                std::cout << "    check failed at " << __FILE__ << ":"          \
                          << __LINE__ << ": " #cond "\n";                       \
        }                                                                       \
    } while (0)

SupportSet set1(std::vector<long> xs) {
    std::vector<IVec> v;
    for (auto x : xs) v.push_back(IVec{x});
    return SupportSet(1, std::move(v));
}

SupportSet set2(std::vector<std::pair<long, long>> pts) {
    std::vector<IVec> v;
    for (auto [x, y] : pts) v.push_back(IVec{x, y});
    return SupportSet(2, std::move(v));
}

SupportSet unit_square() { return set2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

SupportSet random_set(std::mt19937& rng, std::size_t dim, int max_pts, long lo, long hi) {
    std::uniform_int_distribution<long> coord(lo, hi);
    std::uniform_int_distribution<int> count(static_cast<int>(dim) + 1, max_pts);
    std::vector<IVec> pts;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        IVec p(dim);
        for (auto& x : p) x = coord(rng);
        pts.push_back(p);
    }
    return SupportSet(dim, pts);
}

IVec random_primitive(std::mt19937& rng, std::size_t dim, long radius) {
    std::uniform_int_distribution<long> coord(-radius, radius);
    for (;;) {
        IVec l(dim);
        for (auto& x : l) x = coord(rng);
        if (!is_zero(l)) return primitive(std::move(l));
    }
}

// --------------------------------------------------------------- criterion 1

void volume_mv_consistency() {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t dim = trial < 50 ? 2 : 3;
        SupportSet a = random_set(rng, dim, 8, 0, 4);
        CHECK(lattice_volume(a) == ehrhart_volume(a));
    }
    // mixed volume: symmetry, Minkowski multilinearity, diagonal, monotonicity
    for (int trial = 0; trial < 25; ++trial) {
        SupportSet a = random_set(rng, 2, 5, 0, 4);
        SupportSet b = random_set(rng, 2, 5, 0, 4);
        SupportSet c = random_set(rng, 2, 4, 0, 3);
        CHECK(mixed_volume({a, b}) == mixed_volume({b, a}));
        CHECK(mixed_volume({a.pointwise_sum(c), b}) ==
              mixed_volume({a, b}) + mixed_volume({c, b}));
        Int diag = affine_span(a).dim() == 2 ? lattice_volume(a) : Int(0);
        CHECK(mixed_volume({a, a}) == diag);
        SupportSet bigger = a;
        bigger.points.push_back(IVec{5, 5});
        CHECK(mixed_volume({a, b}) <= mixed_volume({bigger, b}));
    }
    for (int trial = 0; trial < 10; ++trial) {
        SupportSet a = random_set(rng, 3, 5, 0, 3);
        SupportSet b = random_set(rng, 3, 5, 0, 3);
        SupportSet c = random_set(rng, 3, 5, 0, 3);
        CHECK(mixed_volume({a, b, c}) == mixed_volume({c, a, b}));
        Int diag = affine_span(a).dim() == 3 ? lattice_volume(a) : Int(0);
        CHECK(mixed_volume({a, a, a}) == diag);
    }
}

// --------------------------------------------------------------- criterion 2

void bkk_against_oracle() {
    std::mt19937 rng(202);
    int done = 0, inconclusive = 0, attempts = 0;
    while (done < 30 && attempts < 300) {
        SupportSet a = random_set(rng, 2, 6, -2, 3);
        SupportSet b = random_set(rng, 2, 6, -2, 3);
        if (affine_span(a).dim() != 2 || affine_span(b).dim() != 2) continue;
        ++attempts;
        try {
            Int n = count_roots_2d(sample(a, 500 + attempts), sample(b, 900 + attempts));
            CHECK(n == euler_bkk({a, b}, 2));
            ++done;
        } catch (const OracleInconclusive&) {
            ++inconclusive;
        }
    }
    CHECK(done == 30);
    CHECK(5 * inconclusive < attempts);  // abstention rate below 20%
}

// --------------------------------------------------------------- criterion 3

void euler_triple_identity() {
    std::mt19937 rng(303);
    int done2 = 0, done3 = 0;
    while (done2 < 100) {
        SupportSet a = random_set(rng, 2, 6, 0, 3);
        try {
            CriticalCISummary s = critical_ci_summary(a);
            CHECK(s.euler_gf == s.euler_e);
            CHECK(s.euler_e == s.euler_local);
            ++done2;
        } catch (const DegenerateAxis&) {
        }
    }
    while (done3 < 50) {
        SupportSet a = random_set(rng, 3, 6, 0, 2);
        try {
            CriticalCISummary s = critical_ci_summary(a);
            CHECK(s.euler_gf == s.euler_e);
            CHECK(s.euler_e == s.euler_local);
            ++done3;
        } catch (const DegenerateAxis&) {
        }
    }
    CHECK(critical_ci_summary(unit_square()).euler_e == 0);
    SupportSet trapezoid = set2({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(critical_ci_summary(trapezoid).euler_e == 1);
    CHECK(count_critical_oracle(trapezoid, OracleMode::hypersurface_s1_first_axis, 7) == 1);
}

// --------------------------------------------------------------- criterion 4

void hat_structure() {
    std::mt19937 rng(404);
    int done = 0;
    while (done < 50) {
        SupportSet a = random_set(rng, 3, 6, 0, 3);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant) continue;
        try {
            CriticalCISummary s = critical_ci_summary(a);
            if (s.hat.vertices.empty()) continue;
            CHECK(s.hat.is_lattice());
            for (int t = 0; t < 20; ++t)
                CHECK(hat_face_identity(a, random_primitive(rng, 3, 2)).equal);
            CHECK(is_compatible(s.hat.to_support_set(), s.tropical));
            ++done;
        } catch (const DegenerateAxis&) {
        }
    }
}

// --------------------------------------------------------------- criterion 5

void critical_counts_agree() {
    std::mt19937 rng(505);
    int done = 0;
    while (done < 100) {
        std::size_t dim = done % 2 ? 3 : 2;
        SupportSet a = random_set(rng, dim, 7, -3, 3);
        bool origin = false;
        for (const auto& p : a.points)
            if (is_zero(p)) origin = true;
        if (origin) continue;
        CHECK(count_df(a).count == count_df_recursive(a));
        ++done;
    }
    int checked = 0, tried = 0;
    while (checked < 30 && tried < 300) {
        ++tried;
        SupportSet a = random_set(rng, tried % 3 == 0 ? 1 : 2, 6, -3, 3);
        bool origin = false;
        for (const auto& p : a.points)
            if (is_zero(p)) origin = true;
        if (origin) continue;
        Int actual;
        try {
            actual = count_critical_oracle(a, OracleMode::critical_df, 4000 + tried);
        } catch (const OracleInconclusive&) {
            continue;
        }
        CountResult r = count_df(a);
        CHECK(actual == r.count * r.saturation_index);
        CHECK(count_df_recursive(a) * r.saturation_index == actual);
        ++checked;
    }
    CHECK(checked == 30);
    CHECK(count_df(set2({{1, 0}, {0, 1}, {1, 1}})).count == 1);
    CHECK(count_df(set2({{1, 0}, {2, 0}, {0, 1}})).count == 0);
    CHECK(count_df(set1({1, 2, 4})).count == 3);
    CHECK(count_s1(unit_square()).count == 0);
}

// --------------------------------------------------------------- criterion 6

void support_sequence_bridge() {
    std::mt19937 rng(606);
    int done = 0;
    while (done < 50) {
        std::size_t dim = done % 2 ? 3 : 2;
        SupportSet a = random_set(rng, dim, 6, 0, 3);
        bool constant = true;
        for (const auto& p : a.points)
            if (p[0] != a.points[0][0]) constant = false;
        if (constant) continue;
        CriticalIncremental h;
        try {
            h = hat_incremental(a);
        } catch (const DegenerateAxis&) {
            continue;
        }
        if (h.hat.vertices.empty()) continue;
        // the derivative pair: coefficients of f and of df/dx_1
        std::vector<QVec> v(2, QVec(a.points.size()));
        for (std::size_t j = 0; j < a.points.size(); ++j) {
            v[0][j] = 1;
            v[1][j] = Rat(a.points[j][0]);
        }
        for (int t = 0; t < 200; ++t) {
            IVec l = random_primitive(rng, dim, 3);
            auto phi = support_sequence(a, v, l).phi;
            CHECK(phi[0] == support_value(a, l));
            CHECK(Rat(phi[0] + phi[1]) == support_value(h.hat, l));
        }
        ++done;
    }
}

// --------------------------------------------------------------- criterion 7

void symmetric_suite() {
    SymmetricIncremental seg = check_incremental(set2({{0, 0}, {2, 0}}));
    CHECK(seg.d_a == 2);
    CHECK(seg.check.vertices ==
          std::vector<QVec>({QVec{0, 2}, QVec{2, 0}}));
    SymmetricIncremental tri = check_incremental(set2({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(tri.reduced == hull(set2({{0, 0}, {1, 0}, {0, 1}})));

    CHECK(symmetric_ci_summary(set2({{0, 0}, {2, 0}})).euler_proper == 0);
    CHECK(symmetric_ci_summary(set2({{0, 0}, {1, 0}, {0, 1}})).euler_proper == 0);
    CHECK(symmetric_ci_summary(set2({{0, 0}, {2, 0}, {0, 2}})).euler_proper == 0);

    std::mt19937 rng(707);
    int done = 0, tried = 0;
    while (done < 30 && tried < 2000) {
        ++tried;
        SupportSet a = random_set(rng, 3, 6, 0, 2);
        try {
            SymmetricCISummary s = symmetric_ci_summary(a);
            CHECK(link_formulas_n3(a, LinkFormulaMode::symmetric_proper) == s.euler_proper);
            CHECK(euler_slicewise(a, LinkFormulaMode::symmetric_proper) == s.euler_proper);
            CHECK(link_formulas_n3(a, LinkFormulaMode::symmetric_diag) ==
                  s.euler_diagonal_projected);
            ++done;
        } catch (const DenominatorUndefined&) {
        } catch (const HypothesisViolated&) {
        } catch (const NotAFace&) {
        } catch (const EmptyResult&) {
        }
    }
    CHECK(done == 30);

    std::vector<SupportSet> bs = blinders(SupportSet(3, {IVec{0, 0, 0}, IVec{1, 1, 1}, IVec{1, 0, 0}}));
    CHECK(bs.size() == 1);
    for (int trial = 0; trial < 20; ++trial) {
        SupportSet a = random_set(rng, 2, 6, 0, 3);
        if (affine_span(a).dim() != 2) continue;
        CHECK(blinders(a).empty());
    }
}

// --------------------------------------------------------------- criterion 8

void obstruction_tables() {
    ObstructionTable t = euler_obstructions(set1({0, 1, 3}));
    std::size_t whole = t.lattice.faces.size() - 1;
    std::size_t v0 = t.lattice.index_of(SupportSet(1, {IVec{0}}));
    std::size_t v3 = t.lattice.index_of(SupportSet(1, {IVec{3}}));
    CHECK(t.c[v0][whole] == 1);
    CHECK(t.c[v3][whole] == 2);
    CHECK(t.e[v0][whole] == -1);
    CHECK(t.e[v3][whole] == -2);

    std::mt19937 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        SupportSet a = random_set(rng, 3, 6, 0, 2);
        ObstructionTable r = euler_obstructions(a);
        IMat prod = matmul(r.c, r.e);
        bool identity = true;
        for (std::size_t i = 0; i < prod.rows; ++i)
            for (std::size_t j = 0; j < prod.cols; ++j)
                if (prod[i][j] != (i == j ? 1 : 0)) identity = false;
        CHECK(identity);
    }
}

// --------------------------------------------------------------- criterion 9

void localization_identities() {
    std::mt19937 rng(909);
    int done_mv = 0, tried = 0;
    while (done_mv < 20 && tried < 600) {
        ++tried;
        SupportSet s1 = random_set(rng, 2, 6, 0, 3);
        SupportSet s2 = random_set(rng, 2, 6, 0, 3);
        IVec l{-1, -1};
        SupportSet t1, t2;
        t1.ambient_dim = t2.ambient_dim = 2;
        SupportSet f1 = support_face(s1, l), f2 = support_face(s2, l);
        for (const auto& p : s1.points)
            if (!f1.contains(p)) t1.points.push_back(p);
        for (const auto& p : s2.points)
            if (!f2.contains(p)) t2.points.push_back(p);
        if (t1.points.empty() || t2.points.empty()) continue;
        try {
            CHECK(localization_locmv({s1, s2}, {t1, t2}).equal);
            ++done_mv;
        } catch (const HypothesisViolated&) {
        }
    }
    CHECK(done_mv == 20);

    int done_vol = 0;
    tried = 0;
    while (done_vol < 20 && tried < 600) {
        ++tried;
        SupportSet a0 = random_set(rng, 2, 7, 0, 4);
        Polytope h = hull(a0);
        if (h.dim != 2) continue;
        IVec gone = h.lattice_vertices()[rng() % h.vertices.size()];
        SupportSet a;
        a.ambient_dim = 2;
        for (const auto& p : a0.points)
            if (p != gone) a.points.push_back(p);
        if (a.points.empty()) continue;
        try {
            CHECK(localization_locvol({a0}, a).equal);
            ++done_vol;
        } catch (const HypothesisViolated&) {
        } catch (const NotAFace&) {
        }
    }
    CHECK(done_vol == 20);
}

// -------------------------------------------------------------- criterion 10

std::string g_golden_script, g_cli_binary;

void cli_golden() {
    if (g_golden_script.empty() || g_cli_binary.empty()) {
        std::cout << "    no golden script/CLI path given\n";
        ++g_failures_in_suite;
        return;
    }
    std::string cmd = "bash '" + g_golden_script + "' '" + g_cli_binary + "' > /dev/null";
    CHECK(std::system(cmd.c_str()) == 0);
}

struct Criterion {
    const char* label;
    void (*run)();
};

const Criterion kCriteria[] = {
    {"1 volume and mixed-volume consistency", volume_mv_consistency},
    {"2 BKK root count against the oracle", bkk_against_oracle},
    {"3 Euler characteristic triple identity", euler_triple_identity},
    {"4 hat polytope structure", hat_structure},
    {"5 critical-point counts", critical_counts_agree},
    {"6 support sequence vs hat polytope", support_sequence_bridge},
    {"7 symmetric system suite", symmetric_suite},
    {"8 obstruction tables", obstruction_tables},
    {"9 localization identities", localization_identities},
    {"10 CLI golden corpus", cli_golden},
};

}  // namespace

int main(int argc, char** argv) {
    if (argc >= 3) {
        g_golden_script = argv[1];
        g_cli_binary = argv[2];
    }
    int failed = 0;
    for (const Criterion& c : kCriteria) {
        g_failures_in_suite = 0;
        try {
            c.run();
        } catch (const std::exception& e) {
            std::cout << "    unexpected exception: " << e.what() << "\n";
            ++g_failures_in_suite;
        }
        bool ok = g_failures_in_suite == 0;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.label << "\n";
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
