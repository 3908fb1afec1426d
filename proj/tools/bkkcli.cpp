// Command-line front end: JSON in, JSON envelope out, one command per
// theorem-level operation of the library.
//
// Exit codes: 0 success, 2 malformed input, 3 unsupported/degenerate input,
// 4 the root-counting oracle abstained.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bkk/bkk_formulas.hpp"
#include "bkk/critical_counts.hpp"
#include "bkk/errors.hpp"
#include "bkk/fans.hpp"
#include "bkk/incremental.hpp"
#include "bkk/oracle.hpp"
#include "bkk/polytope.hpp"
#include "bkk/toric_sing.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace bkk;

namespace {

constexpr const char* kVersion = "1.0";

// ---------------------------------------------------------------------------
// Parsing

Int parse_int(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.find_first_not_of("-0123456789") == std::string::npos)
            return Int(s);
    }
    throw MalformedInput(std::string(what) + ": expected an integer or a decimal string");
}

Rat parse_rat(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (!s.empty() && s.find_first_not_of("-/0123456789") == std::string::npos) {
            Rat r(s);
            r.canonicalize();
            return r;
        }
    }
    throw MalformedInput(std::string(what) + ": expected a rational as p or p/q");
}

json slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
    return j;
}

SupportSet parse_support(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw MalformedInput(origin + ": a support file needs dim and points");
    Int dim = parse_int(j["dim"], "dim");
    if (dim < 1 || dim > 16) throw MalformedInput(origin + ": unreasonable dim");
    std::size_t n = dim.get_ui();
    if (!j["points"].is_array() || j["points"].empty())
        throw MalformedInput(origin + ": points must be a nonempty array");
    SupportSet a;
    a.ambient_dim = n;
    for (const json& jp : j["points"]) {
        if (!jp.is_array() || jp.size() != n)
            throw MalformedInput(origin + ": every point must have dim coordinates");
        IVec p;
        for (const json& c : jp) p.push_back(parse_int(c, "coordinate"));
        if (a.contains(p)) throw MalformedInput(origin + ": duplicate point");
        a.points.push_back(std::move(p));
    }
    return a;
}

SupportSet load_support(const std::string& path) { return parse_support(slurp(path), path); }

std::vector<SupportSet> load_supports(const std::vector<std::string>& paths) {
    std::vector<SupportSet> out;
    for (const auto& p : paths) out.push_back(load_support(p));
    return out;
}

IVec parse_covector(const std::string& s, std::size_t dim) {
    IVec l;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of("-0123456789 ") != std::string::npos || tok.empty())
            throw MalformedInput("covector entries must be integers");
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        l.push_back(Int(tok));
    }
    if (l.size() != dim) throw MalformedInput("covector length must match the ambient dim");
    return l;
}

WeightedFan parse_fan(const json& j, const std::string& origin) {
    if (!j.is_object() || !j.contains("cells"))
        throw MalformedInput(origin + ": a fan file needs cells");
    WeightedFan f;
    f.ambient_dim = parse_int(j.value("ambient_dim", json(0)), "ambient_dim").get_ui();
    for (const json& jc : j["cells"]) {
        std::vector<IVec> rays, lin;
        for (const json& jr : jc.value("rays", json::array())) {
            IVec r;
            for (const json& c : jr) r.push_back(parse_int(c, "ray"));
            rays.push_back(std::move(r));
        }
        for (const json& jr : jc.value("lineality", json::array())) {
            IVec r;
            for (const json& c : jr) r.push_back(parse_int(c, "lineality"));
            lin.push_back(std::move(r));
        }
        Cone cone = make_cone(f.ambient_dim, rays, lin);
        f.cells.emplace_back(std::move(cone), parse_int(jc.value("weight", json(1)), "weight"));
        f.dim = std::max(f.dim, f.cells.back().first.dim);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Serialization (every integer as a decimal string; vertices lex-sorted)

json js(const Int& x) { return x.get_str(); }
json js(const Rat& x) { return x.get_str(); }
json js(std::size_t x) { return std::to_string(x); }

json jvec(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(js(x));
    return a;
}

json jqvec(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(js(x));
    return a;
}

json jvecs(std::vector<IVec> vs, bool sorted = true) {
    if (sorted) std::sort(vs.begin(), vs.end());
    json a = json::array();
    for (const IVec& v : vs) a.push_back(jvec(v));
    return a;
}

json jsupport(const SupportSet& a) {
    return json{{"dim", js(a.ambient_dim)}, {"points", jvecs(a.points)}};
}

json jpolytope(const Polytope& p) {
    json v = json::array();
    for (const QVec& q : p.vertices) v.push_back(jqvec(q));  // already canonical order
    return json{{"ambient_dim", js(p.ambient_dim)}, {"dim", js(p.dim)}, {"vertices", v}};
}

json jfan(const WeightedFan& f) {
    std::vector<json> cells;
    for (const auto& [cone, w] : f.cells) {
        cells.push_back(json{{"dim", js(cone.dim)},
                             {"rays", jvecs(cone.rays)},
                             {"lineality", jvecs(cone.lineality)},
                             {"weight", js(w)}});
    }
    std::sort(cells.begin(), cells.end(),
              [](const json& a, const json& b) { return a.dump() < b.dump(); });
    return json{{"ambient_dim", js(f.ambient_dim)},
                {"dim", js(f.dim)},
                {"cells", json(cells)}};
}

json jcount(const CountResult& r) {
    json faces = json::array();
    for (const auto& c : r.contributing_faces)
        faces.push_back(json{{"points", jvecs(c.face.points)},
                             {"e", js(c.e)},
                             {"volume", js(c.volume)}});
    return json{{"result", js(r.count)},
                {"saturation_index", js(r.saturation_index)},
                {"evaluated_on", jsupport(r.a)},
                {"contributing_faces", faces}};
}

// ---------------------------------------------------------------------------
// Envelope and error mapping

int exit_code_for(const EngineError& e) {
    static const char* malformed[] = {"MalformedInput", "DimensionMismatch", "NotAFace",
                                      "UnboundSymbol"};
    for (const char* c : malformed)
        if (e.code() == c) return 2;
    if (e.code() == "OracleInconclusive") return 4;
    return 3;  // unsupported or degenerate input
}

void emit(const std::string& command, const json& inputs, const json& result,
          const std::vector<std::string>& assumptions) {
    json env{{"version", kVersion},
             {"command", command},
             {"inputs", inputs},
             {"assumptions", json(assumptions)},
             {"result", result}};
    std::cout << env.dump(2) << "\n";
}

int emit_error(const std::string& command, const std::string& code, const std::string& message,
               int exit_code) {
    json env{{"version", kVersion},
             {"command", command},
             {"error", json{{"code", code}, {"message", message}}}};
    std::cout << env.dump(2) << "\n";
    return exit_code;
}

json echo_supports(const std::vector<SupportSet>& as) {
    json a = json::array();
    for (const auto& s : as) a.push_back(jsupport(s));
    return a;
}

const std::string kGeneric = "generic coefficients";
const std::string kSmooth = "smoothness assumed: Milnor term 0";

}  // namespace

// ---------------------------------------------------------------------------
// Commands

namespace {

struct Options {
    std::vector<std::string> files;
    std::string mode, which, type, l, vectors_path, compatible_fan;
    long n = -1;
    std::size_t axis = 1;  // 1-based
    std::uint64_t seed = 1;
    bool recursive = false;
    bool reflexive = false, irreducible = false, star = false, blinders_flag = false;
};

int cmd_volume(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    emit("volume", echo_supports({a}),
         json{{"lattice_volume", js(lattice_volume(a))},
              {"ehrhart_volume", js(ehrhart_volume(a))},
              {"span_dim", js(affine_span(a).dim())}},
         {});
    return 0;
}

int cmd_mv(const Options& o) {
    std::vector<SupportSet> as = load_supports(o.files);
    emit("mv", echo_supports(as), json{{"result", js(mixed_volume(as))}}, {});
    return 0;
}

int cmd_euler_bkk(const Options& o) {
    std::vector<SupportSet> as = load_supports(o.files);
    std::size_t n = o.n >= 0 ? static_cast<std::size_t>(o.n) : as.at(0).ambient_dim;
    emit("euler-bkk", echo_supports(as), json{{"result", js(euler_bkk(as, n))}},
         {kGeneric});
    return 0;
}

int cmd_hat(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    if (o.axis < 1 || o.axis > a.ambient_dim) throw MalformedInput("axis out of range");
    CriticalIncremental h = hat_incremental(a, o.axis - 1);
    json bs = json::array();
    for (const Int& b : h.contributing_b) bs.push_back(js(b));
    emit("hat", echo_supports({a}),
         json{{"hat", jpolytope(h.hat)}, {"contributing_b", bs}}, {});
    return 0;
}

int cmd_check_incr(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    SymmetricIncremental s = check_incremental(a);
    json slices = json::array();
    for (const auto& [b, p] : s.check_b)
        slices.push_back(json{{"b", js(b)}, {"slice", jpolytope(p)}});
    emit("check-incr", echo_supports({a}),
         json{{"d_a", js(s.d_a)},
              {"check", jpolytope(s.check)},
              {"reduced", jpolytope(s.reduced)},
              {"slices", slices}},
         {});
    return 0;
}

int cmd_critical_ci(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    CriticalCISummary s = critical_ci_summary(a);
    emit("critical-ci", echo_supports({a}),
         json{{"hat", jpolytope(s.hat)},
              {"euler_gf", js(s.euler_gf)},
              {"euler_e", js(s.euler_e)},
              {"euler_local", js(s.euler_local)},
              {"tropical", jfan(s.tropical)},
              {"irreducible_sufficient", s.irreducible_sufficient},
              {"calabi_yau_sufficient", s.calabi_yau_sufficient}},
         {kGeneric, kSmooth});
    return 0;
}

int cmd_symmetric_ci(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    SymmetricCISummary s = symmetric_ci_summary(a);
    emit("symmetric-ci", echo_supports({a}),
         json{{"d_a", js(s.d_a)},
              {"check", jpolytope(s.check)},
              {"reduced", jpolytope(s.reduced)},
              {"euler_proper", js(s.euler_proper)},
              {"euler_diagonal_component", js(s.euler_diagonal_component)},
              {"euler_diagonal_projected", js(s.euler_diagonal_projected)},
              {"tropical_proper", jfan(s.tropical_proper)},
              {"tropical_diagonal", jfan(s.tropical_diagonal)},
              {"condition_star_holds", s.condition_star_holds},
              {"proper_irreducible_sufficient", s.proper_irreducible_sufficient},
              {"proper_calabi_yau_sufficient", s.proper_calabi_yau_sufficient},
              {"diagonal_irreducible_sufficient", s.diagonal_irreducible_sufficient},
              {"diagonal_calabi_yau_sufficient", s.diagonal_calabi_yau_sufficient}},
         {kGeneric, kSmooth});
    return 0;
}

int cmd_count(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    if (o.mode == "s1") {
        emit("count", echo_supports({a}), jcount(count_s1(a)), {kGeneric});
    } else if (o.mode == "df") {
        json r = jcount(count_df(a));
        if (o.recursive) r["recursive"] = js(count_df_recursive(a));
        emit("count", echo_supports({a}), r, {kGeneric});
    } else if (o.mode == "s1cci") {
        // Euler characteristic of {f = df/dx_1 = 0}, by the three equivalent
        // formulas of the critical complete-intersection summary
        CriticalCISummary s = critical_ci_summary(a);
        emit("count", echo_supports({a}),
             json{{"result", js(s.euler_e)},
                  {"euler_gf", js(s.euler_gf)},
                  {"euler_local", js(s.euler_local)}},
             {kGeneric, kSmooth});
    } else {
        throw MalformedInput("count mode must be s1, df or s1cci");
    }
    return 0;
}

int cmd_algebraic_degree(const Options& o) {
    std::vector<SupportSet> as = load_supports(o.files);
    emit("algebraic-degree", echo_supports(as),
         json{{"result", js(algebraic_degree(as))},
              {"cayley", jsupport(cayley_support(as))}},
         {kGeneric});
    return 0;
}

int cmd_obstructions(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    ObstructionTable t = euler_obstructions(a);
    json faces = json::array();
    for (std::size_t i = 0; i < t.lattice.faces.size(); ++i)
        faces.push_back(json{{"points", jvecs(t.lattice.faces[i].points)},
                             {"dim", js(t.lattice.dims[i])}});
    auto mat = [&](const IMat& m) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(jvec(m[i]));
        return rows;
    };
    emit("obstructions", echo_supports({a}),
         json{{"faces", faces}, {"c", mat(t.c)}, {"e", mat(t.e)}}, {});
    return 0;
}

int cmd_support_seq(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    json jv = slurp(o.vectors_path);
    if (!jv.is_object() || !jv.contains("vectors"))
        throw MalformedInput(o.vectors_path + ": a vectors file needs vectors");
    std::vector<QVec> v;
    for (const json& row : jv["vectors"]) {
        QVec q;
        for (const json& c : row) q.push_back(parse_rat(c, "vector entry"));
        if (q.size() != a.size())
            throw MalformedInput("every vector needs one entry per support point");
        v.push_back(std::move(q));
    }
    IVec l = parse_covector(o.l, a.ambient_dim);
    SupportSequence s = support_sequence(a, v, l);
    json phi = json::array();
    for (const Int& x : s.phi) phi.push_back(js(x));
    emit("support-seq", echo_supports({a}), json{{"l", jvec(l)}, {"phi", phi}}, {});
    return 0;
}

int cmd_tropical(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    if (o.type == "critical") {
        emit("tropical", echo_supports({a}),
             json{{"fan", jfan(critical_ci_summary(a).tropical)}}, {kGeneric});
    } else if (o.type == "symmetric") {
        SymmetricCISummary s = symmetric_ci_summary(a);
        emit("tropical", echo_supports({a}),
             json{{"proper", jfan(s.tropical_proper)},
                  {"diagonal", jfan(s.tropical_diagonal)}},
             {kGeneric});
    } else {
        throw MalformedInput("tropical type must be critical or symmetric");
    }
    return 0;
}

int cmd_check(const Options& o) {
    SupportSet a = load_support(o.files.at(0));
    json r;
    if (o.reflexive) {
        r["reflexive"] = is_reflexive(hull(a));
    } else if (!o.compatible_fan.empty()) {
        WeightedFan f = parse_fan(slurp(o.compatible_fan), o.compatible_fan);
        r["compatible"] = is_compatible(a, f);
    } else if (o.irreducible) {
        std::vector<SupportSet> as = load_supports(o.files);
        IrreducibilityVerdict v = irreducibility_bkk(as, as.at(0).ambient_dim);
        r["irreducible"] = v.irreducible;
        if (v.witness) {
            json subset = json::array();
            for (std::size_t i : v.witness->subset) subset.push_back(js(i));
            r["witness"] = json{{"subset", subset},
                                {"subspace", jvecs(v.witness->subspace)},
                                {"mixed_volume", js(v.witness->mixed_volume)}};
        }
    } else if (o.star) {
        r["condition_star"] = condition_star(a);
    } else if (o.blinders_flag) {
        json bs = json::array();
        for (const SupportSet& e : blinders(a)) bs.push_back(jvecs(e.points));
        r["blinders"] = bs;
    } else {
        throw MalformedInput("pick one check: --reflexive, --compatible, --irreducible, "
                             "--condition-star or --blinders");
    }
    emit("check", echo_supports({a}), r, {});
    return 0;
}

int cmd_oracle(const Options& o) {
    std::vector<SupportSet> as = load_supports(o.files);
    if (o.mode == "roots") {
        Int n;
        if (as.size() == 1 && as[0].ambient_dim == 1)
            n = count_roots_1d(sample(as[0], o.seed));
        else if (as.size() == 2)
            n = count_roots_2d(sample(as[0], o.seed), sample(as[1], o.seed + 1));
        else
            throw MalformedInput("roots mode takes one 1-D or two 2-D supports");
        emit("oracle", echo_supports(as),
             json{{"result", js(n)}, {"seed", std::to_string(o.seed)}}, {kGeneric});
    } else if (o.mode == "critical") {
        OracleMode m = OracleMode::critical_df;
        if (o.which == "s1") m = OracleMode::hypersurface_s1;
        else if (o.which == "s1cci") m = OracleMode::hypersurface_s1_first_axis;
        else if (o.which != "df" && !o.which.empty())
            throw MalformedInput("oracle system must be df, s1 or s1cci");
        Int n = count_critical_oracle(as.at(0), m, o.seed);
        emit("oracle", echo_supports(as),
             json{{"result", js(n)}, {"seed", std::to_string(o.seed)}}, {kGeneric});
    } else {
        throw MalformedInput("oracle mode must be roots or critical");
    }
    return 0;
}

int cmd_identities(const Options& o) {
    std::vector<SupportSet> as = load_supports(o.files);
    json r;
    if (o.which == "locmv") {
        if (as.size() % 2 != 0)
            throw MalformedInput("locmv takes an even number of supports: A_1..A_n B_1..B_n");
        std::vector<SupportSet> first(as.begin(), as.begin() + as.size() / 2);
        std::vector<SupportSet> second(as.begin() + as.size() / 2, as.end());
        IdentityReport rep = localization_locmv(first, second);
        r = json{{"lhs", js(rep.lhs)}, {"rhs", js(rep.rhs)}, {"equal", rep.equal}};
    } else if (o.which == "locvol") {
        if (as.size() < 2)
            throw MalformedInput("locvol takes a chain A_0..A_k and the subset A last");
        std::vector<SupportSet> chain(as.begin(), as.end() - 1);
        IdentityReport rep = localization_locvol(chain, as.back());
        r = json{{"lhs", js(rep.lhs)}, {"rhs", js(rep.rhs)}, {"equal", rep.equal}};
    } else if (o.which == "th0cci") {
        CriticalCISummary s = critical_ci_summary(as.at(0));
        bool equal = s.euler_gf == s.euler_e && s.euler_e == s.euler_local;
        r = json{{"euler_gf", js(s.euler_gf)},
                 {"euler_e", js(s.euler_e)},
                 {"euler_local", js(s.euler_local)},
                 {"equal", equal}};
    } else if (o.which == "answerlink3") {
        LinkFormulaMode m = LinkFormulaMode::critical;
        if (o.type == "diag") m = LinkFormulaMode::symmetric_diag;
        else if (o.type == "proper") m = LinkFormulaMode::symmetric_proper;
        else if (o.type != "critical" && !o.type.empty())
            throw MalformedInput("answerlink3 type must be critical, diag or proper");
        Int link = link_formulas_n3(as.at(0), m);
        Int slice = euler_slicewise(as.at(0), m);
        r = json{{"link_formula", js(link)},
                 {"slicewise", js(slice)},
                 {"equal", link == slice}};
    } else {
        throw MalformedInput("identity must be locmv, locvol, th0cci or answerlink3");
    }
    emit("identities", echo_supports(as), r, {kGeneric, kSmooth});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial invariants of sparse polynomial systems"};
    app.require_subcommand(1);
    Options o;

    auto add_files = [&](CLI::App* c, int min) {
        c->add_option("files", o.files, "support files (JSON)")->expected(min, -1);
    };

    add_files(app.add_subcommand("volume", "lattice and Ehrhart volume"), 1);
    add_files(app.add_subcommand("mv", "lattice mixed volume"), 1);
    auto* eb = app.add_subcommand("euler-bkk", "Euler characteristic of a complete intersection");
    add_files(eb, 1);
    eb->add_option("--n", o.n, "ambient dimension (default: dim of the first file)");
    auto* hat = app.add_subcommand("hat", "critical incremental polytope");
    add_files(hat, 1);
    hat->add_option("--axis", o.axis, "1-based derivative axis (default 1)");
    add_files(app.add_subcommand("check-incr", "symmetric incremental polytope"), 1);
    add_files(app.add_subcommand("critical-ci", "critical complete-intersection summary"), 1);
    add_files(app.add_subcommand("symmetric-ci", "symmetric complete-intersection summary"), 1);
    auto* count = app.add_subcommand("count", "critical-point counts");
    add_files(count, 1);
    count->add_option("--mode", o.mode, "s1 | df | s1cci")->required();
    count->add_flag("--recursive", o.recursive, "cross-check df by the face recursion");
    add_files(app.add_subcommand("algebraic-degree", "degree of the Lagrange system"), 2);
    add_files(app.add_subcommand("obstructions", "multiplicities and Euler obstructions"), 1);
    auto* seq = app.add_subcommand("support-seq", "support sequence phi_l");
    add_files(seq, 1);
    seq->add_option("--vectors", o.vectors_path, "coefficient vectors (JSON)")->required();
    seq->add_option("--l", o.l, "covector, comma-separated")->required();
    auto* trop = app.add_subcommand("tropical", "tropical cycles of the engineered systems");
    add_files(trop, 1);
    trop->add_option("--type", o.type, "critical | symmetric")->required();
    auto* check = app.add_subcommand("check", "predicates on a support");
    add_files(check, 1);
    check->add_flag("--reflexive", o.reflexive, "is the hull reflexive");
    check->add_option("--compatible", o.compatible_fan, "fan file: compatible with the support");
    check->add_flag("--irreducible", o.irreducible, "BKK irreducibility of all given supports");
    check->add_flag("--condition-star", o.star, "condition (*) of the symmetric setup");
    check->add_flag("--blinders", o.blinders_flag, "list the blinders");
    auto* orc = app.add_subcommand("oracle", "independent root counting (n <= 2)");
    add_files(orc, 1);
    orc->add_option("--mode", o.mode, "roots | critical")->required();
    orc->add_option("--seed", o.seed, "sampling seed");
    orc->add_option("--system", o.which, "critical mode: df | s1 | s1cci");
    auto* ident = app.add_subcommand("identities", "independently evaluated identities");
    add_files(ident, 1);
    ident->add_option("--which", o.which, "locmv | locvol | th0cci | answerlink3")->required();
    ident->add_option("--type", o.type, "answerlink3: critical | diag | proper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::string name = app.get_subcommands().empty()
                               ? "?"
                               : app.get_subcommands().front()->get_name();
        return emit_error(name, "MalformedInput", e.what(), 2);
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "volume") return cmd_volume(o);
        if (name == "mv") return cmd_mv(o);
        if (name == "euler-bkk") return cmd_euler_bkk(o);
        if (name == "hat") return cmd_hat(o);
        if (name == "check-incr") return cmd_check_incr(o);
        if (name == "critical-ci") return cmd_critical_ci(o);
        if (name == "symmetric-ci") return cmd_symmetric_ci(o);
        if (name == "count") return cmd_count(o);
        if (name == "algebraic-degree") return cmd_algebraic_degree(o);
        if (name == "obstructions") return cmd_obstructions(o);
        if (name == "support-seq") return cmd_support_seq(o);
        if (name == "tropical") return cmd_tropical(o);
        if (name == "check") return cmd_check(o);
        if (name == "oracle") return cmd_oracle(o);
        if (name == "identities") return cmd_identities(o);
        return emit_error(name, "MalformedInput", "unknown command", 2);
    } catch (const EngineError& e) {
        return emit_error(name, e.code(), e.what(), exit_code_for(e));
    } catch (const std::exception& e) {
        return emit_error(name, "MalformedInput", e.what(), 2);
    }
}
