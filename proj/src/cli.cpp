#include "latpol/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latpol/families.hpp"
#include "latpol/ik.hpp"
#include "latpol/io.hpp"
#include "latpol/lattice_points.hpp"
#include "latpol/verifier.hpp"

namespace latpol {

using nlohmann::json;

namespace {

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::BudgetExceeded:
        case ErrorKind::HullBudgetExceeded:
        case ErrorKind::SamplingExhausted:
        case ErrorKind::NoFeasibleStart:
            return kExitBudget;
        case ErrorKind::OriginNotInterior:
        case ErrorKind::PointNotInterior:
        case ErrorKind::MultipleInteriorPoints:
        case ErrorKind::NotFullDimensional:
        case ErrorKind::DegenerateFace:
            return kExitGeometry;
        default:
            return kExitUsage;
    }
}

struct Globals {
    std::uint64_t seed = 1;
    double budget = 0;  // 0: environment or default
    std::string json_out;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

void emit(const Globals& g, const json& j, std::ostream& out) {
    if (g.json_out.empty() || g.json_out == "-") {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(g.json_out);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + g.json_out + "'");
    f << j.dump(2) << "\n";
}

void apply_budget(const Globals& g) {
    double b = kDefaultPointBudget;
    if (const char* env = std::getenv("LATPOL_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0))
            throw Error(ErrorKind::InvalidArgument, std::string("LATPOL_BUDGET is not a positive number: ") + env);
        b = v;
    }
    if (g.budget > 0) b = g.budget;
    set_point_budget(b);
}

json rational_list(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json cmd_construct(const std::string& family, unsigned d, const std::vector<unsigned>& params) {
    auto param = [&](const char* what) {
        if (params.empty()) throw Error(ErrorKind::ParameterOutOfRange, std::string("family needs ") + what);
        return params[0];
    };
    json j;
    if (family == "T") {
        unsigned i = param("an index j");
        j = to_json(simplex_T(d, i).polytope());
        j["family"] = "T";
        j["parameters"] = {d, i};
    } else if (family == "S") {
        unsigned k = param("an interior point count k");
        j = to_json(simplex_S(d, k).polytope());
        j["family"] = "S";
        j["parameters"] = {d, k};
    } else if (family == "seed") {
        j = to_json(dual_seed(d));
        j["family"] = "seed";
        j["parameters"] = {d};
    } else {
        throw Error(ErrorKind::ParameterOutOfRange, "unknown family '" + family + "' (expected T, S or seed)");
    }
    return j;
}

json face_table(const IntegralSimplex& S) {
    json table = json::array();
    for (std::size_t l = 1; l <= S.dim(); ++l) {
        json fs = json::array();
        Rational mx = 0, mn = -1;
        for (const auto& F : faces(S, l)) {
            Rational v = normalized_volume(S, F);
            mx = std::max(mx, v);
            if (mn < 0 || v < mn) mn = v;
            fs.push_back({{"vertices", F}, {"vol_Z", to_string(v)}});
        }
        table.push_back({{"l", l}, {"max", to_string(mx)}, {"min", to_string(mn)}, {"faces", fs}});
    }
    return table;
}

json cmd_analyze(const PolytopeDocument& doc) {
    const std::size_t d = doc.dim;
    json j{{"schema", kSchema}, {"dim", d}};
    const RatVec origin(d, Rational(0));
    if (!doc.integral()) {
        RationalPolytope R = to_rational_polytope(doc);
        Rational v = volume(R);
        j["integral"] = false;
        j["vertices"] = R.vertices().size();
        j["interior_points"] = interior_lattice_points(R).size();
        j["G"] = lattice_points(R).size();
        j["ld"] = lattice_diameter(R);
        j["volume"] = to_string(v);
        j["normalized_volume"] = to_string(v * Rational(factorial(static_cast<unsigned>(d))));
        if (contains_in_interior(R.facets(), origin)) {
            Rational f = Rational(factorial(static_cast<unsigned>(d)));
            j["mahler"] = to_string(f * f * v * volume(polar_dual(R)));
        }
        return j;
    }
    IntegralPolytope P = to_integral_polytope(doc);
    auto pts = lattice_points(P);
    auto in = interior_lattice_points(P);
    Rational v = volume(P);
    Rational f = Rational(factorial(static_cast<unsigned>(d)));
    j["integral"] = true;
    j["vertices"] = P.vertices().size();
    j["interior_points"] = in.size();
    j["G"] = pts.size();
    j["ld"] = lattice_diameter(P.facets(), pts);
    j["volume"] = to_string(v);
    j["normalized_volume"] = to_string(f * v);
    if (in.size() == 1) {
        j["interior_point"] = vector_json(in[0]);
        j["ca"] = to_string(coefficient_of_asymmetry(P, in[0]));
    }
    const bool simplex = P.vertices().size() == d + 1;
    if (simplex) {
        IntegralSimplex S = IntegralSimplex::from_polytope(P);
        if (in.size() == 1) j["sorted_beta"] = rational_list(barycentric_coordinates(S, to_rational(in[0])).sorted);
        j["face_volume_table"] = face_table(S);
    }
    // Mahler volume about the unique interior lattice point, else about o when it is interior.
    if (in.size() == 1) {
        IntVec shift = in[0];
        for (auto& x : shift) x = -x;
        j["mahler"] = to_string(f * f * v * volume(polar_dual(P.translated(shift))));
    } else if (contains_in_interior(P, origin)) {
        j["mahler"] = to_string(f * f * v * volume(polar_dual(P)));
    }
    j["pim"] = is_inclusion_maximal_lattice_free(P);
    return j;
}

json cmd_dual(const PolytopeDocument& doc, bool center) {
    const std::size_t d = doc.dim;
    RationalPolytope R = to_rational_polytope(doc);
    json j;
    RatVec shift(d, Rational(0));
    if (center) {
        auto in = interior_lattice_points(R);
        if (in.empty()) throw Error(ErrorKind::OriginNotInterior, "no interior lattice point to center on");
        if (in.size() > 1)
            throw Error(ErrorKind::MultipleInteriorPoints, "centering needs a unique interior lattice point");
        for (std::size_t k = 0; k < d; ++k) shift[k] = -Rational(in[0][k]);
        R = R.translated(shift);
    }
    RationalPolytope D = polar_dual(R);
    j = to_json(D);
    j["integral"] = D.is_integral();
    if (center) {
        RatVec c(d);
        for (std::size_t k = 0; k < d; ++k) c[k] = -shift[k];
        j["center"] = vector_json(c);
    }
    return j;
}

json cmd_ik(const IKInstance& inst, bool oracle, double tol, unsigned starts, std::uint64_t seed) {
    validate(inst);
    IKSolution sol = solve_over_candidates(inst);
    Localization loc = locate_optimum(inst, sol);
    json cv = json::array();
    for (const auto& x : sol.candidate_values) cv.push_back(to_string(x));
    json j{{"schema", kSchema},          {"n", inst.n},           {"a", inst.a},
           {"b", inst.b},                {"value", to_string(sol.value)}, {"minimizers", sol.minimizers},
           {"unique", sol.unique},       {"candidate_values", cv}};
    j["case"] = loc.applicable ? json(std::string(1, loc.label)) : json(nullptr);
    j["case_check"] = loc.applicable ? json(loc.pass) : json(nullptr);
    if (oracle) {
        NumericResult r = numeric_refine(inst, tol, starts, seed);
        j["oracle_value"] = r.value;
        j["oracle_log10_value"] = r.log10_value;
        j["oracle_point"] = r.point;
    }
    return j;
}

json cmd_diameter(const PolytopeDocument& doc) {
    json j{{"schema", kSchema}};
    if (doc.integral()) {
        IntegralPolytope P = to_integral_polytope(doc);
        auto pts = lattice_points(P);
        j["ld"] = lattice_diameter(P.facets(), pts);
        j["lattice_points"] = pts.size();
    } else {
        RationalPolytope R = to_rational_polytope(doc);
        j["ld"] = lattice_diameter(R);
        j["lattice_points"] = lattice_points(R).size();
    }
    return j;
}

std::vector<unsigned> parse_dims(const std::string& s) {
    std::vector<unsigned> dims;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            dims.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParameterOutOfRange, "bad dimension list '" + s + "'");
        }
    }
    return dims;
}

std::pair<std::string, Rational> parse_mutation(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return {s, Rational(-1)};
    std::string amount = s.substr(colon + 1);
    if (!amount.empty() && amount[0] == '+') amount.erase(0, 1);
    return {s.substr(0, colon), parse_rational(amount)};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact lattice polytope toolkit", "latpol"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--budget", g.budget, "Point enumeration budget (overrides LATPOL_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--json", g.json_out, "Write the JSON result to this file");

    std::string family;
    unsigned cd = 0;
    std::vector<unsigned> params;
    auto* construct = app.add_subcommand("construct", "Emit a member of an extremal family (T d j, S d k, seed d)");
    construct->add_option("family", family, "T, S or seed")->required();
    construct->add_option("d", cd, "Dimension")->required();
    construct->add_option("param", params, "j for T, k for S")->expected(0, 1);

    std::string file = "-";
    auto* analyze = app.add_subcommand("analyze", "Invariants of a polytope document");
    analyze->add_option("file", file, "Polytope JSON, - for stdin");

    bool center = false;
    auto* dual = app.add_subcommand("dual", "Polar dual of a polytope document");
    dual->add_option("file", file, "Polytope JSON, - for stdin");
    dual->add_flag("--center", center, "Translate the unique interior lattice point to the origin first");

    IKInstance inst;
    bool oracle = false;
    double tol = 1e-9;
    unsigned starts = 8;
    auto* ik = app.add_subcommand("ik", "Minimize x_a ... x_b over the ordered product-sum simplex");
    ik->add_option("--n", inst.n, "Number of variables")->required();
    ik->add_option("--a", inst.a, "First index")->required();
    ik->add_option("--b", inst.b, "Last index")->required();
    ik->add_flag("--oracle", oracle, "Also run the numeric multi-start oracle");
    ik->add_option("--tol", tol, "Oracle tolerance")->check(CLI::PositiveNumber);
    ik->add_option("--starts", starts, "Oracle starts")->check(CLI::Range(1u, 1000u));

    auto* diameter = app.add_subcommand("diameter", "Lattice diameter of a polytope document");
    diameter->add_option("file", file, "Polytope JSON, - for stdin");

    std::string dims = "2,3,4";
    unsigned samples = 200;
    std::vector<std::string> mutate;
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--dims", dims, "Comma-separated dimensions in 2..5");
    verify->add_option("--samples", samples, "Random simplices per dimension")->check(CLI::PositiveNumber);
    verify->add_option("--mutate", mutate, "Fault injection CHECK[:DELTA], DELTA defaults to -1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        apply_budget(g);
        if (*construct) {
            emit(g, cmd_construct(family, cd, params), out);
        } else if (*analyze) {
            emit(g, cmd_analyze(parse_document_text(read_input(file, in))), out);
        } else if (*dual) {
            emit(g, cmd_dual(parse_document_text(read_input(file, in)), center), out);
        } else if (*ik) {
            emit(g, cmd_ik(inst, oracle, tol, starts, g.seed), out);
        } else if (*diameter) {
            emit(g, cmd_diameter(parse_document_text(read_input(file, in))), out);
        } else if (*verify) {
            SuiteConfig cfg;
            cfg.dims = parse_dims(dims);
            cfg.samples = samples;
            cfg.seed = g.seed;
            cfg.budget = point_budget();
            for (const auto& m : mutate) {
                auto [id, delta] = parse_mutation(m);
                cfg.mutations[id] = delta;
            }
            VerificationReport rep = run_suite(cfg);
            json j = rep.to_json();
            if (g.json_out.empty()) {
                out << j.dump(2) << "\n";
            } else {
                emit(g, j, out);
                for (const auto& r : rep.records)
                    out << verdict_name(r.verdict) << "  " << r.id << "  " << r.instance << "  " << r.lhs << " "
                        << r.relation << " " << r.rhs << "\n";
                out << "records " << rep.records.size() << ", violated " << rep.violations() << "\n";
            }
            return rep.ok() ? kExitOk : kExitViolations;
        }
    } catch (const Error& e) {
        err << "latpol: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const json::exception& e) {
        err << "latpol: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace latpol
