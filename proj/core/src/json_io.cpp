#include <painleve/json_io.hpp>

#include <painleve/errors.hpp>

namespace painleve
{

json to_json(const BigFloat &v)
{
    return v.to_string();
}

json to_json(const Scalar &s)
{
    if (s.is_exact()) {
        return {{"num", s.rational().get_num().get_str()}, {"den", s.rational().get_den().get_str()}};
    }
    return {{"re", s.real().to_string()}, {"im", s.imag().to_string()}, {"bits", s.bits()}};
}

Scalar scalar_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return Scalar(j.get<long>());
    }
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (!j.is_object()) {
        throw ContractViolation("scalar JSON must be an object, integer or string");
    }
    if (j.contains("num")) {
        mpq_class q(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
        if (q.get_den() == 0) {
            throw ContractViolation("scalar JSON with zero denominator");
        }
        q.canonicalize();
        return Scalar(q);
    }
    const unsigned bits = j.value("bits", Scalar::default_bits);
    try {
        return Scalar(BigFloat(j.at("re").get<std::string>(), bits),
                      BigFloat(j.value("im", std::string("0")), bits));
    } catch (const std::invalid_argument &e) {
        throw ContractViolation(std::string("bad scalar JSON: ") + e.what());
    }
}

json to_json(const DominantBalance &b)
{
    json j{{"case", to_string(b.case_tag)},
           {"alpha", to_json(b.alpha)},
           {"beta", to_json(b.beta)},
           {"a_alpha", b.a_alpha ? to_json(*b.a_alpha) : json("free")},
           {"b_beta", to_json(b.b_beta)},
           {"sign", b.sign},
           {"logarithmic", b.logarithmic}};
    if (!b.note.empty()) {
        j["note"] = b.note;
    }
    return j;
}

json to_json(const ResonanceSet &r)
{
    json values = json::array();
    for (const auto &v : r.values) {
        values.push_back(to_json(v));
    }
    return {{"values", values}, {"all_integer", r.all_integer}, {"has_extra_negative", r.has_extra_negative}};
}

json to_json(const ClassificationVerdict &v)
{
    json balances = json::array();
    for (const auto &[b, r] : v.balances) {
        json e = to_json(b);
        e["resonances"] = to_json(r);
        balances.push_back(e);
    }
    return {{"label", to_string(v.label)}, {"detail", v.detail}, {"balances", balances}};
}

json to_json(const CandidateC &c)
{
    json j{{"C", to_json(c.C)}, {"tag", c.tag}, {"annotation", c.annotation}};
    if (c.alpha) {
        j["alpha"] = to_json(*c.alpha);
    }
    return j;
}

json to_json(const BranchSpec &s)
{
    return {{"case", to_string(s.series_case)},
            {"lambda", to_json(s.lambda)},
            {"root_branch", to_string(s.root_branch)},
            {"x_sign", s.x_sign},
            {"residue_sign", s.residue_sign},
            {"fourth_root", s.fourth_root},
            {"free_params", {to_json(s.free_params[0]), to_json(s.free_params[1])}},
            {"t0", to_json(s.t0)},
            {"label", s.label()}};
}

BranchSpec branch_from_json(const json &j)
{
    BranchSpec s;
    s.series_case = parse_series_case(j.at("case").get<std::string>());
    s.lambda = scalar_from_json(j.at("lambda"));
    s.root_branch = parse_root_branch(j.at("root_branch").get<std::string>());
    s.x_sign = j.value("x_sign", 1);
    s.residue_sign = j.value("residue_sign", 1);
    s.fourth_root = j.value("fourth_root", 0U);
    if (j.contains("free_params")) {
        s.free_params = {scalar_from_json(j.at("free_params").at(0)), scalar_from_json(j.at("free_params").at(1))};
    }
    if (j.contains("t0")) {
        s.t0 = scalar_from_json(j.at("t0"));
    }
    return s;
}

json to_json(const RecurrenceStep &s)
{
    json m = json::array();
    for (std::size_t r = 0; r < s.matrix.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < s.matrix.cols(); ++c) {
            row.push_back(to_json(s.matrix(r, c)));
        }
        m.push_back(row);
    }
    json j{{"k", s.k},
           {"matrix", m},
           {"rhs", {to_json(s.rhs[0]), to_json(s.rhs[1])}},
           {"det", to_json(s.det)},
           {"resolution", to_string(s.resolution)},
           {"solution", {to_json(s.solution[0]), to_json(s.solution[1])}}};
    if (s.freed_component >= 0) {
        j["freed_component"] = s.freed_component == 0 ? "x" : "y";
    }
    return j;
}

json series_to_json(const PuiseuxSeries &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return {{"step", s.den() == 1 ? "1" : "1/2"},
            {"lead", to_json(Scalar(s.lead()))},
            {"coeffs", coeffs},
            {"center", to_json(s.center())}};
}

PuiseuxSeries series_from_json(const json &j)
{
    const std::string step = j.value("step", std::string("1"));
    unsigned den = 0;
    if (step == "1") {
        den = 1;
    } else if (step == "1/2") {
        den = 2;
    } else {
        throw ContractViolation("series step must be \"1\" or \"1/2\"");
    }
    const Scalar lead = scalar_from_json(j.at("lead"));
    if (!lead.is_exact()) {
        throw ContractViolation("series lead exponent must be an exact rational");
    }
    std::vector<Scalar> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(scalar_from_json(c));
    }
    const Scalar center = j.contains("center") ? scalar_from_json(j.at("center")) : Scalar(0);
    return PuiseuxSeries(lead.rational(), den, std::move(coeffs), center);
}

json to_json(const SeriesBuild &b)
{
    json x = series_to_json(b.x);
    json y = series_to_json(b.y);
    for (json *s : {&x, &y}) {
        (*s)["N"] = b.N;
        (*s)["case"] = to_string(b.spec.series_case);
        (*s)["branch"] = to_json(b.spec);
        (*s)["H"] = to_json(b.H);
    }
    json steps = json::array();
    for (const auto &s : b.steps) {
        if (s.resolution != Resolution::unique) {
            steps.push_back(to_json(s));
        }
    }
    return {{"branch", to_json(b.spec)}, {"N", b.N}, {"H", to_json(b.H)}, {"x", x}, {"y", y},
            {"singular_steps", steps}};
}

json to_json(const ConvergenceCertificate &c)
{
    const auto &a = c.audit;
    json audit{{"first_bound", a.first_bound},   {"second_bound", a.second_bound},
               {"lambda_abs", to_json(a.lambda_abs)}, {"prefix_max", to_json(a.prefix_max)},
               {"root_bound", to_json(a.root_bound)}, {"first_factor", to_json(a.first_factor)},
               {"second_factor", to_json(a.second_factor)}};
    if (!a.c1_abs.is_zero()) {
        audit["c1_abs"] = to_json(a.c1_abs);
    }
    if (!a.coupling.is_zero()) {
        audit["two_sqrt6_upper"] = to_json(a.coupling);
    }
    return {{"M", to_json(c.M)},
            {"N", c.N},
            {"epsilon", to_json(c.epsilon)},
            {"checked_prefix", c.checked_prefix},
            {"verdict", c.certified ? "certified" : "not-certified"},
            {"reason", c.reason},
            {"audit", audit}};
}

json to_json(const TailCheck &t)
{
    return {{"N", t.N}, {"difference", to_json(t.difference)}, {"bound", to_json(t.bound)}, {"holds", t.holds}};
}

json to_json(const SubequationAnsatz &a)
{
    json h = json::object();
    for (const auto &[idx, v] : a.h) {
        h[std::to_string(idx.first) + "," + std::to_string(idx.second)] = to_json(v);
    }
    return {{"m", a.m}, {"h", h}};
}

json to_json(const FitResult &f)
{
    json basis = json::array();
    for (std::size_t i = 0; i < f.basis.size(); ++i) {
        json e = to_json(f.basis[i]);
        e["residual_order"] = f.residual_orders[i];
        basis.push_back(e);
    }
    return {{"match_order", f.match_order},
            {"raw_nullspace_dim", f.raw_nullspace_dim},
            {"nullspace_dim", f.nullspace_dim},
            {"basis", basis}};
}

json to_json(const QuarticForm &q)
{
    return {{"A", to_json(q.A)},   {"G", to_json(q.G)},   {"B", to_json(q.B)},
            {"E", to_json(q.E)},   {"C", to_json(q.Cq)}, {"P0", to_json(q.P0)}};
}

json to_json(const QuarticReport &r)
{
    json poly = json::array();
    for (const auto &c : r.poly) {
        poly.push_back(to_json(c));
    }
    json j{{"identically_zero", r.identically_zero},
           {"polynomial", r.polynomial},
           {"yt2_polynomial_part", poly},
           {"remainder", {{"G_5_2", to_json(r.half_power_G)}, {"E_3_2", to_json(r.half_power_E)}}},
           {"P0", to_json(r.P0)}};
    if (r.ansatz) {
        j["ansatz"] = to_json(*r.ansatz);
    }
    return j;
}

json to_json(const PhaseState &s)
{
    return {{"x", to_json(s.x)}, {"xt", to_json(s.xt)}, {"y", to_json(s.y)}, {"yt", to_json(s.yt)},
            {"t", to_json(s.t)}};
}

} // namespace painleve
