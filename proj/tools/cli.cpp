#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <painleve/convergence.hpp>
#include <painleve/errors.hpp>
#include <painleve/integrator.hpp>
#include <painleve/json_io.hpp>
#include <painleve/painleve_test.hpp>
#include <painleve/subequation.hpp>

#ifndef PAINLEVE_VERSION
#define PAINLEVE_VERSION "unknown"
#endif

namespace painleve::cli
{

namespace
{

struct RunConfig {
    std::string command;
    std::string C;
    std::string lambda = "1/9";
    std::string series_case = "C165";
    std::string branch = "plus";
    int x_sign = 1;
    int residue_sign = 1;
    bool imaginary_root = false;
    std::string a2 = "0", b4 = "0", f2 = "0", f4 = "0", t0 = "0";
    int N = 0; // 0: per-command default
    unsigned precision = Scalar::default_bits;
    std::string epsilon = "1/10";
    std::string m_limit = "1024";
    int m = 2;
    int match_order = 0; // 0: as many powers as the series determines
    std::string series_path;
    std::string output_path;
    std::uint64_t seed = 0;
    bool complex_branches = false;
    bool all_branches = false;
    std::string lambda_grid;
    int random = 0;
    std::string t_start = "3/10";
    std::string t_end = "1/2";
    std::string tol = "1e-20";
};

class InvalidConfig : public Error
{
public:
    using Error::Error;
};

Scalar scalar_arg(const std::string &name, const std::string &text, unsigned bits)
{
    try {
        return Scalar::parse(text, bits);
    } catch (const std::exception &e) {
        throw InvalidConfig("--" + name + ": cannot parse '" + text + "' (" + e.what() + ")");
    }
}

json config_echo(const RunConfig &c)
{
    json j{{"lambda", c.lambda}, {"precision_bits", c.precision}, {"seed", c.seed}};
    if (!c.C.empty()) {
        j["C"] = c.C;
    }
    if (c.command != "analyze") {
        j["case"] = c.series_case;
        j["branch"] = c.branch;
        j["x_sign"] = c.x_sign;
        j["residue_sign"] = c.residue_sign;
        j["free_params"] = c.series_case == "C43" ? json{c.f2, c.f4} : json{c.a2, c.b4};
        j["t0"] = c.t0;
        j["N"] = c.N;
    }
    if (c.command == "certify") {
        j["epsilon"] = c.epsilon;
        j["M_limit"] = c.m_limit;
    }
    if (c.command == "fit") {
        j["m"] = c.m;
        j["match_order"] = c.match_order;
    }
    if (!c.series_path.empty()) {
        j["series"] = c.series_path;
    }
    if (c.command == "verify") {
        j["t_start"] = c.t_start;
        j["t_end"] = c.t_end;
        j["tol"] = c.tol;
    }
    if (c.command == "sweep") {
        j["lambda_grid"] = c.lambda_grid;
        j["random"] = c.random;
    }
    if (c.complex_branches) {
        j["complex_branches"] = true;
    }
    return j;
}

json provenance(const RunConfig &c)
{
    return {{"tool", "painleve"},
            {"version", PAINLEVE_VERSION},
            {"command", c.command},
            {"precision_bits", c.precision},
            {"config", config_echo(c)}};
}

BranchSpec branch_from_config(const RunConfig &c)
{
    const unsigned bits = c.precision;
    BranchSpec s;
    s.series_case = parse_series_case(c.series_case);
    s.lambda = scalar_arg("lambda", c.lambda, bits);
    s.root_branch = parse_root_branch(c.branch);
    s.x_sign = c.x_sign;
    s.residue_sign = c.residue_sign;
    s.fourth_root = c.imaginary_root ? 1U : 0U;
    if (s.series_case == SeriesCase::C165) {
        s.free_params = {scalar_arg("a2", c.a2, bits), scalar_arg("b4", c.b4, bits)};
    } else {
        s.free_params = {scalar_arg("f2", c.f2, bits), scalar_arg("f4", c.f4, bits)};
    }
    s.t0 = scalar_arg("t0", c.t0, bits);
    return s;
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidConfig("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw InvalidConfig("'" + path + "' is not valid JSON: " + e.what());
    }
}

json series_report(const SeriesBuild &b)
{
    json j = to_json(b);
    j["residual_max"] = to_json(residual_max(b));
    j["energy_drift_max"] = to_json(energy_drift_max(b));
    return j;
}

json cmd_analyze(const RunConfig &c)
{
    if (c.C.empty()) {
        throw InvalidConfig("analyze needs --C");
    }
    const Scalar C = scalar_arg("C", c.C, c.precision);
    const Scalar lambda = scalar_arg("lambda", c.lambda, c.precision);
    const ClassificationVerdict v = classify(C, lambda);
    json report = to_json(v);
    json agreement = json::array();
    for (const auto &[b, table] : v.balances) {
        const ResonanceSet k = resonances_from_kowalevski(b, C);
        agreement.push_back(to_json(multiset_distance(table.values, k.values)));
    }
    report["kowalevski_agreement"] = agreement;
    json candidates = json::array();
    for (const auto &cand : candidate_C_values()) {
        candidates.push_back(to_json(cand));
    }
    report["candidate_C_values"] = candidates;
    return report;
}

json cmd_series(const RunConfig &c)
{
    const int N = c.N != 0 ? c.N : 20;
    if (!c.all_branches) {
        return series_report(build_series(branch_from_config(c), N));
    }
    const BranchSpec base = branch_from_config(c);
    const BranchEnumeration e = enumerate_branches_detailed(base.series_case, base.lambda, c.complex_branches);
    json builds = json::array();
    std::vector<std::pair<BranchSpec, PuiseuxSeries>> ys;
    for (BranchSpec s : e.distinct) {
        s.free_params = base.free_params;
        s.t0 = base.t0;
        const SeriesBuild b = build_series(s, N);
        builds.push_back(series_report(b));
        ys.emplace_back(s, b.y.with_center(Scalar(0)));
    }
    json pairs = json::array();
    for (const auto &p : residue_pairing(ys)) {
        json e2{{"first", ys[p.first].first.label()}, {"residue", to_json(p.residue)}, {"self_paired", p.self_paired}};
        if (p.second) {
            e2["second"] = ys[*p.second].first.label();
        }
        pairs.push_back(e2);
    }
    return {{"branches", builds}, {"residue_pairs", pairs}};
}

json cmd_certify(const RunConfig &c)
{
    const int N = c.N != 0 ? c.N : 40;
    const SeriesBuild b = build_series(branch_from_config(c), N);
    const Scalar eps = scalar_arg("epsilon", c.epsilon, c.precision);
    const ConvergenceCertificate cert = certify(b, eps, scalar_arg("M-limit", c.m_limit, c.precision));
    json report{{"branch", to_json(b.spec)}, {"certificate", to_json(cert)}};
    if (cert.certified) {
        report["tail_check"] = to_json(geometric_tail_check(b, cert, Scalar(1) - eps, N / 2));
    }
    return report;
}

PuiseuxSeries fit_input(const RunConfig &c)
{
    if (c.series_path.empty()) {
        const int N = c.N != 0 ? c.N : 30;
        return build_series(branch_from_config(c), N).y.with_center(Scalar(0));
    }
    const json j = read_json_file(c.series_path);
    return series_from_json(j.contains("y") ? j.at("y") : j);
}

json cmd_fit(const RunConfig &c)
{
    const PuiseuxSeries y = fit_input(c).with_center(Scalar(0));
    const int match = c.match_order != 0 ? c.match_order : available_match_order(y, c.m);
    return {{"fit", to_json(fit(y, c.m, match))}, {"series_terms", y.size()}};
}

json cmd_verify(const RunConfig &c)
{
    BranchSpec spec;
    PuiseuxSeries xs;
    PuiseuxSeries ys;
    if (!c.series_path.empty()) {
        const json j = read_json_file(c.series_path);
        if (!j.contains("x") || !j.contains("y") || !j.contains("branch")) {
            throw InvalidConfig("verify --series expects a series report with x, y and branch");
        }
        spec = branch_from_json(j.at("branch"));
        xs = series_from_json(j.at("x"));
        ys = series_from_json(j.at("y"));
    } else {
        const int N = c.N != 0 ? c.N : 40;
        const SeriesBuild b = build_series(branch_from_config(c), N);
        spec = b.spec;
        xs = b.x;
        ys = b.y;
    }
    const PolynomialODESystem sys = system_for(spec);
    const auto [rx, ry] = residual_of_series(sys, xs, ys);
    const BigFloat residual = max(rx.max_abs_coeff(), ry.max_abs_coeff());
    const PuiseuxSeries energy = energy_series(sys, xs, ys);

    const Scalar t1 = scalar_arg("t-start", c.t_start, c.precision);
    const Scalar t2 = scalar_arg("t-end", c.t_end, c.precision);
    const PhaseState s1 = state_from_series(xs, ys, t1);
    const PhaseState s2 = state_from_series(xs, ys, t2);
    const IntegrationResult r = integrate_numeric(sys, s1, t2, scalar_arg("tol", c.tol, c.precision));
    BigFloat diff = (r.state.x - s2.x).magnitude();
    for (const auto &d : {r.state.xt - s2.xt, r.state.y - s2.y, r.state.yt - s2.yt}) {
        diff = max(diff, d.magnitude());
    }
    return {{"branch", to_json(spec)},
            {"residual_max", to_json(residual)},
            {"energy_constant", to_json(constant_term(energy))},
            {"energy_drift_max", to_json(max_nonconstant(energy))},
            {"numeric",
             {{"t_start", to_json(t1)},
              {"t_end", to_json(t2)},
              {"series_state", to_json(s2)},
              {"integrated_state", to_json(r.state)},
              {"steps", r.steps},
              {"integrator_energy_drift", to_json(r.energy_drift)},
              {"max_component_difference", to_json(diff)}}}};
}

std::vector<Scalar> sweep_points(const RunConfig &c)
{
    std::vector<Scalar> out;
    if (!c.lambda_grid.empty()) {
        std::vector<std::string> parts;
        std::string part;
        for (char ch : c.lambda_grid + ":") {
            if (ch == ':') {
                parts.push_back(part);
                part.clear();
            } else {
                part += ch;
            }
        }
        if (parts.size() != 3) {
            throw InvalidConfig("--lambda-grid expects a:b:step");
        }
        const Scalar a = scalar_arg("lambda-grid", parts[0], c.precision);
        const Scalar b = scalar_arg("lambda-grid", parts[1], c.precision);
        const Scalar step = scalar_arg("lambda-grid", parts[2], c.precision);
        if (!step.is_real() || !(step.real().sign() > 0)) {
            throw InvalidConfig("--lambda-grid step must be positive");
        }
        const BigFloat slack = threshold_for(c.precision);
        for (long i = 0;; ++i) {
            const Scalar v = a + Scalar(i) * step;
            if (v.real() > b.real() + slack) {
                break;
            }
            if (i >= 10000) {
                throw InvalidConfig("--lambda-grid has more than 10000 points");
            }
            out.push_back(v);
        }
    }
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<long> num(-32, 32);
    std::uniform_int_distribution<long> den(1, 16);
    for (int i = 0; i < c.random; ++i) {
        const long p = num(rng);
        const long q = den(rng);
        out.push_back(Scalar(mpq_class(p, q), c.precision));
    }
    if (out.empty()) {
        throw InvalidConfig("sweep needs --lambda-grid or --random");
    }
    return out;
}

json sweep_point(SeriesCase sc, const Scalar &lambda, bool complex_branches)
{
    const BranchEnumeration e = enumerate_branches_detailed(sc, lambda, complex_branches);
    json distinct = json::array();
    for (const auto &s : e.distinct) {
        distinct.push_back(s.label());
    }
    json merged = json::array();
    for (const auto &[dropped, kept] : e.merged) {
        merged.push_back({{"branch", dropped.label()}, {"same_as", kept.label()}});
    }
    json incompatible = json::array();
    for (const auto &[s, why] : e.incompatible) {
        incompatible.push_back({{"branch", s.label()}, {"reason", why}});
    }
    return {{"lambda", to_json(lambda)},
            {"branch_count", e.distinct.size()},
            {"branches", distinct},
            {"merge", !e.merged.empty()},
            {"merged", merged},
            {"incompatible", incompatible}};
}

json cmd_sweep(const RunConfig &c)
{
    const SeriesCase sc = parse_series_case(c.series_case);
    const std::vector<Scalar> points = sweep_points(c);
    const std::size_t width = std::max(1U, std::thread::hardware_concurrency());
    json rows = json::array();
    for (std::size_t start = 0; start < points.size(); start += width) {
        std::vector<std::future<json>> batch;
        for (std::size_t i = start; i < std::min(points.size(), start + width); ++i) {
            batch.push_back(std::async(std::launch::async, sweep_point, sc, points[i], c.complex_branches));
        }
        for (auto &f : batch) {
            rows.push_back(f.get());
        }
    }
    return {{"case", c.series_case}, {"points", rows}};
}

void add_branch_options(CLI::App *sub, RunConfig &c)
{
    sub->add_option("--case", c.series_case, "C165 or C43")->check(CLI::IsMember({"C165", "C43"}));
    sub->add_option("--lambda", c.lambda, "lambda (p/q exact, decimals rounded)");
    sub->add_option("--branch", c.branch, "plus, minus or zero")->check(CLI::IsMember({"plus", "minus", "zero"}));
    sub->add_option("--x-sign", c.x_sign, "+1 or -1")->check(CLI::IsMember({1, -1}));
    sub->add_option("--residue-sign", c.residue_sign, "sign of f_-1 (C43)")->check(CLI::IsMember({1, -1}));
    sub->add_flag("--imaginary-root", c.imaginary_root, "C165: rotate c1 by i");
    sub->add_option("--a2", c.a2);
    sub->add_option("--b4", c.b4);
    sub->add_option("--f2", c.f2);
    sub->add_option("--f4", c.f4);
    sub->add_option("--t0", c.t0, "singularity position");
    sub->add_option("--N", c.N, "highest coefficient index")->check(CLI::Range(0, 100000));
}

void emit(const json &report, const RunConfig &c, std::ostream &out)
{
    const std::string text = report.dump(2) + "\n";
    if (c.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output_path);
    if (!f) {
        throw InvalidConfig("cannot write '" + c.output_path + "'");
    }
    f << text;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig c;
    if (const char *env = std::getenv("PAINLEVE_PRECISION_BITS"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(env, &used);
            if (used != std::string(env).size()) {
                throw std::invalid_argument("trailing characters");
            }
            c.precision = static_cast<unsigned>(v);
        } catch (const std::exception &) {
            err << "error: PAINLEVE_PRECISION_BITS='" << env << "' is not an integer\n";
            return invalid_config;
        }
    }

    CLI::App app{"Painleve analysis and Laurent series for the generalized Henon-Heiles system", "painleve"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.set_version_flag("--version", PAINLEVE_VERSION);
    app.add_option("--precision", c.precision, "working precision in bits (>= 64)");
    app.add_option("--output", c.output_path, "write the JSON report here instead of stdout");
    app.add_option("--seed", c.seed, "seed for randomized sweeps");

    CLI::App *analyze = app.add_subcommand("analyze", "dominant balances, resonances and classification");
    analyze->add_option("--C", c.C, "C parameter")->required();
    analyze->add_option("--lambda", c.lambda);

    CLI::App *series = app.add_subcommand("series", "build a Laurent/Puiseux series branch");
    add_branch_options(series, c);
    series->add_flag("--all-branches", c.all_branches, "build every enumerated branch and pair residues");
    series->add_flag("--complex-branches", c.complex_branches, "include the i-rotated C165 roots");

    CLI::App *certify_cmd = app.add_subcommand("certify", "convergence certificate for a branch");
    add_branch_options(certify_cmd, c);
    certify_cmd->add_option("--epsilon", c.epsilon, "radius margin, certified for |t| <= 1 - epsilon");
    certify_cmd->add_option("--M-limit", c.m_limit, "largest coefficient bound M tried");

    CLI::App *fit_cmd = app.add_subcommand("fit", "fit a first-order subequation to a y-series");
    add_branch_options(fit_cmd, c);
    fit_cmd->add_option("--series", c.series_path, "series JSON (bare series or a series report)");
    fit_cmd->add_option("--m", c.m, "subequation degree")->check(CLI::Range(1, 4));
    fit_cmd->add_option("--match-order", c.match_order, "matched powers of t");

    CLI::App *verify = app.add_subcommand("verify", "residual, energy and numeric cross-check");
    add_branch_options(verify, c);
    verify->add_option("--series", c.series_path, "series report to re-verify");
    verify->add_option("--t-start", c.t_start);
    verify->add_option("--t-end", c.t_end);
    verify->add_option("--tol", c.tol, "integrator tolerance");

    CLI::App *sweep = app.add_subcommand("sweep", "branch counts over a lambda grid");
    sweep->add_option("--case", c.series_case)->check(CLI::IsMember({"C165", "C43"}));
    sweep->add_option("--lambda-grid", c.lambda_grid, "a:b:step");
    sweep->add_option("--random", c.random, "additional random rational lambdas (see --seed)")
        ->check(CLI::Range(0, 10000));
    sweep->add_flag("--complex-branches", c.complex_branches);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return invalid_config;
    }
    c.command = app.get_subcommands().front()->get_name();
    if (c.precision < Scalar::min_bits) {
        err << "error: precision must be at least " << Scalar::min_bits << " bits\n";
        return invalid_config;
    }

    try {
        json report;
        int code = ok;
        if (c.command == "analyze") {
            report = cmd_analyze(c);
        } else if (c.command == "series") {
            report = cmd_series(c);
        } else if (c.command == "certify") {
            report = cmd_certify(c);
            if (report["certificate"]["verdict"] != "certified") {
                code = certification;
            }
        } else if (c.command == "fit") {
            report = cmd_fit(c);
        } else if (c.command == "verify") {
            report = cmd_verify(c);
        } else {
            report = cmd_sweep(c);
        }
        report["provenance"] = provenance(c);
        emit(report, c, out);
        return code;
    } catch (const CompatibilityViolation &e) {
        err << "error: " << e.what() << "\n";
        return compatibility;
    } catch (const InsufficientPrefix &e) {
        err << "error: " << e.what() << "\n";
        return certification;
    } catch (const InvalidConfig &e) {
        err << "error: " << e.what() << "\n";
        return invalid_config;
    } catch (const ContractViolation &e) {
        err << "error: contract-violation: " << e.what() << "\n";
        return invalid_config;
    } catch (const UnsupportedParameter &e) {
        err << "error: " << e.what() << "\n";
        return invalid_config;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

} // namespace painleve::cli
