#include <painleve/laurent_series.hpp>

#include <algorithm>

#include <painleve/errors.hpp>

namespace painleve
{

std::string to_string(SeriesCase c)
{
    return c == SeriesCase::C165 ? "C165" : "C43";
}

std::string to_string(RootBranch b)
{
    switch (b) {
    case RootBranch::plus: return "plus";
    case RootBranch::minus: return "minus";
    case RootBranch::zero: break;
    }
    return "zero";
}

std::string to_string(Resolution r)
{
    switch (r) {
    case Resolution::unique: return "unique";
    case Resolution::freed_parameter: return "freed-parameter";
    case Resolution::compatibility_constrained: break;
    }
    return "compatibility-constrained";
}

SeriesCase parse_series_case(const std::string &text)
{
    if (text == "C165") {
        return SeriesCase::C165;
    }
    if (text == "C43") {
        return SeriesCase::C43;
    }
    throw ContractViolation("unknown series case '" + text + "' (expected C165 or C43)");
}

RootBranch parse_root_branch(const std::string &text)
{
    if (text == "plus") {
        return RootBranch::plus;
    }
    if (text == "minus") {
        return RootBranch::minus;
    }
    if (text == "zero") {
        return RootBranch::zero;
    }
    throw ContractViolation("unknown root branch '" + text + "' (expected plus, minus or zero)");
}

Scalar series_C(SeriesCase c)
{
    return c == SeriesCase::C165 ? Scalar(-16, 5) : Scalar(-4, 3);
}

std::string BranchSpec::label() const
{
    std::string s = to_string(series_case) + "/" + to_string(root_branch) + "/x" + (x_sign > 0 ? "+" : "-");
    if (series_case == SeriesCase::C43) {
        s += residue_sign > 0 ? "/res+" : "/res-";
    } else if (fourth_root == 1) {
        s += "/i";
    }
    return s;
}

Scalar RecurrenceState::x_at(int k) const
{
    if (k < -2) {
        return Scalar(0);
    }
    return x.at(static_cast<std::size_t>(k + 2));
}

Scalar RecurrenceState::y_at(int k) const
{
    if (k < -2) {
        return Scalar(0);
    }
    return y.at(static_cast<std::size_t>(k + 2));
}

Scalar c1_radicand(const Scalar &lambda)
{
    return Scalar(35) * (Scalar(2048) * lambda * lambda - Scalar(1280) * lambda + Scalar(387));
}

Scalar c1_fourth_power(const Scalar &lambda, RootBranch branch)
{
    if (branch == RootBranch::zero) {
        throw ContractViolation("c1_fourth_power has only plus and minus branches");
    }
    const Scalar s(branch == RootBranch::plus ? 1 : -1);
    return Scalar(1125) * (Scalar(525) - Scalar(1680) * lambda + s * Scalar(4) * sqrt(c1_radicand(lambda)))
           / Scalar(167552);
}

Scalar f_minus1_squared(const Scalar &lambda, RootBranch branch)
{
    if (branch == RootBranch::zero) {
        return Scalar(0);
    }
    const Scalar s(branch == RootBranch::plus ? 1 : -1);
    const Scalar radicand = Scalar(7) * (Scalar(1216) * lambda * lambda - Scalar(1824) * lambda + Scalar(783));
    return (Scalar(105) - Scalar(140) * lambda + s * sqrt(radicand)) / Scalar(385);
}

namespace
{

void validate(const BranchSpec &spec)
{
    if (spec.x_sign != 1 && spec.x_sign != -1) {
        throw ContractViolation("x_sign must be +1 or -1");
    }
    if (spec.residue_sign != 1 && spec.residue_sign != -1) {
        throw ContractViolation("residue_sign must be +1 or -1");
    }
    if (spec.fourth_root > 1) {
        throw ContractViolation("fourth_root must be 0 or 1");
    }
    if (spec.series_case == SeriesCase::C165 && spec.root_branch == RootBranch::zero) {
        throw ContractViolation("the zero root branch exists only for C43");
    }
    if (!spec.lambda.is_finite()) {
        throw ContractViolation("lambda must be finite");
    }
}

// sum_{j=lo}^{hi} u_j v_{n-j}
template <class U, class V>
Scalar convolution(int lo, int hi, int n, U u, V v)
{
    Scalar acc;
    for (int j = lo; j <= hi; ++j) {
        acc += u(j) * v(n - j);
    }
    return acc;
}

struct FreedSlot {
    Resolution resolution;
    int component;
};

FreedSlot freed_slot(SeriesCase c, int k)
{
    if (c == SeriesCase::C165) {
        if (k == 2) {
            return {Resolution::compatibility_constrained, 0};
        }
        if (k == 4) {
            return {Resolution::freed_parameter, 1};
        }
    } else {
        if (k == -1 || k == 4) {
            return {Resolution::freed_parameter, 1};
        }
        if (k == 2) {
            return {Resolution::compatibility_constrained, 1};
        }
    }
    throw ContractViolation("unexpected singular step k=" + std::to_string(k));
}

Scalar freed_value(const BranchSpec &spec, int k)
{
    if (spec.series_case == SeriesCase::C43 && k == -1) {
        return Scalar(spec.residue_sign) * sqrt(f_minus1_squared(spec.lambda, spec.root_branch));
    }
    return k == 2 ? spec.free_params[0] : spec.free_params[1];
}

} // namespace

std::array<Scalar, 2> leading_coefficients(const BranchSpec &spec)
{
    validate(spec);
    if (spec.series_case == SeriesCase::C165) {
        const Scalar c1 = nth_root(c1_fourth_power(spec.lambda, spec.root_branch), 4, spec.fourth_root);
        return {Scalar(spec.x_sign) * c1, Scalar(-15, 8)};
    }
    return {Scalar(spec.x_sign) * sqrt(Scalar(6)), Scalar(-3)};
}

Scalar step_determinant(SeriesCase c, int k)
{
    const Scalar kk(k);
    if (c == SeriesCase::C165) {
        return (kk * kk - Scalar(4)) * (kk * kk - kk - Scalar(12));
    }
    const Scalar u = kk * kk - kk;
    return (u - Scalar(6)) * (u - Scalar(8)) - Scalar(24);
}

RecurrenceStep assemble_step(const BranchSpec &spec, int k, const RecurrenceState &prior)
{
    validate(spec);
    if (k < -1) {
        throw ContractViolation("recurrence steps start at k = -1");
    }
    if (prior.x.size() != prior.y.size() || prior.last_index() != k - 1) {
        throw ContractViolation("step k=" + std::to_string(k) + " needs exactly the coefficients of index < k");
    }
    auto X = [&prior](int j) { return prior.x_at(j); };
    auto Y = [&prior](int j) { return prior.y_at(j); };
    const Scalar kk(k);
    const Scalar lead_x = prior.x_at(-2);

    RecurrenceStep step;
    step.k = k;
    if (spec.series_case == SeriesCase::C165) {
        step.matrix = DenseMatrix{{kk * kk - Scalar(4), Scalar(2) * lead_x}, {Scalar(0), kk * kk - kk - Scalar(12)}};
        step.rhs[0] = -spec.lambda * X(k - 2) - Scalar(2) * convolution(-1, k - 1, k - 2, X, Y);
        step.rhs[1] = -Y(k - 2) - convolution(-2, k - 1, k - 3, X, X)
                      - Scalar(16, 5) * convolution(-1, k - 1, k - 2, Y, Y);
    } else {
        step.matrix = DenseMatrix{{kk * kk - kk - Scalar(6), Scalar(2) * lead_x},
                                  {Scalar(2) * lead_x, kk * kk - kk - Scalar(8)}};
        step.rhs[0] = -spec.lambda * X(k - 2) - Scalar(2) * convolution(-1, k - 1, k - 2, X, Y);
        step.rhs[1] = -Y(k - 2) - convolution(-1, k - 1, k - 2, X, X)
                      - Scalar(4, 3) * convolution(-1, k - 1, k - 2, Y, Y);
    }
    step.det = step_determinant(spec.series_case, k);
    return step;
}

RecurrenceStep step_recurrence(const BranchSpec &spec, int k, const RecurrenceState &prior)
{
    RecurrenceStep step = assemble_step(spec, k, prior);
    const LinearSolution sol = solve_linear(step.matrix, step.rhs);
    if (!step.det.is_zero()) {
        if (sol.kind != SolutionKind::unique) {
            throw ContractViolation("numerically singular step k=" + std::to_string(k));
        }
        step.solution = {sol.particular[0], sol.particular[1]};
        return step;
    }

    if (sol.kind == SolutionKind::inconsistent) {
        throw CompatibilityViolation(k, "right-hand side is outside the range of the singular step matrix");
    }
    const FreedSlot slot = freed_slot(spec.series_case, k);
    step.resolution = slot.resolution;
    step.freed_component = slot.component;
    if (sol.nullspace.size() != 1) {
        throw ContractViolation("singular step k=" + std::to_string(k) + " with unexpected nullity");
    }
    const auto &n = sol.nullspace[0];
    const auto c = static_cast<std::size_t>(slot.component);
    if (n[c].is_zero()) {
        throw ContractViolation("free component does not parametrize the nullspace at k=" + std::to_string(k));
    }
    const Scalar value = freed_value(spec, k);
    const Scalar t = (value - sol.particular[c]) / n[c];
    for (std::size_t i = 0; i < 2; ++i) {
        step.solution[i] = sol.particular[i] + t * n[i];
    }
    step.solution[c] = value;
    return step;
}

SeriesBuild build_series(const BranchSpec &spec, int N)
{
    if (N < 5) {
        throw ContractViolation("build_series needs N >= 5 to pass the k = 4 step (got N=" + std::to_string(N) + ")");
    }
    SeriesBuild out;
    out.spec = spec;
    out.N = N;
    const auto leads = leading_coefficients(spec);
    out.coeffs.x = {leads[0]};
    out.coeffs.y = {leads[1]};
    for (int k = -1; k <= N; ++k) {
        RecurrenceStep step = step_recurrence(spec, k, out.coeffs);
        out.coeffs.x.push_back(step.solution[0]);
        out.coeffs.y.push_back(step.solution[1]);
        out.steps.push_back(std::move(step));
    }

    const std::size_t count = static_cast<std::size_t>(N) + 3;
    if (spec.series_case == SeriesCase::C165) {
        std::vector<Scalar> xs(2 * count);
        for (std::size_t i = 0; i < count; ++i) {
            xs[2 * i] = out.coeffs.x[i];
        }
        out.x = PuiseuxSeries(mpq_class(-3, 2), 2, std::move(xs), spec.t0);
    } else {
        out.x = PuiseuxSeries(mpq_class(-2), 1, out.coeffs.x, spec.t0);
    }
    out.y = PuiseuxSeries(mpq_class(-2), 1, out.coeffs.y, spec.t0);
    out.H = constant_term(energy_series(system_for(spec), out.x, out.y));
    return out;
}

PolynomialODESystem system_for(const BranchSpec &spec)
{
    return build_henon_heiles(series_C(spec.series_case), spec.lambda);
}

BigFloat residual_max(const SeriesBuild &build)
{
    const auto [rx, ry] = residual_of_series(system_for(build.spec), build.x, build.y);
    return max(rx.max_abs_coeff(), ry.max_abs_coeff());
}

BigFloat energy_drift_max(const SeriesBuild &build)
{
    return max_nonconstant(energy_series(system_for(build.spec), build.x, build.y));
}

namespace
{

bool close(const Scalar &u, const Scalar &v)
{
    if (u.is_exact() && v.is_exact()) {
        return u == v;
    }
    const unsigned bits = std::max(u.bits(), v.bits());
    const BigFloat scale = max(BigFloat(1, bits), max(u.magnitude(), v.magnitude()));
    return (u - v).magnitude() <= threshold_for(bits) * scale;
}

bool same_coefficients(const RecurrenceState &a, const RecurrenceState &b)
{
    if (a.x.size() != b.x.size() || a.y.size() != b.y.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        if (!close(a.x[i], b.x[i]) || !close(a.y[i], b.y[i])) {
            return false;
        }
    }
    return true;
}

} // namespace

BranchEnumeration enumerate_branches_detailed(SeriesCase c, const Scalar &lambda, bool complex_branches)
{
    std::vector<BranchSpec> nominal;
    auto make = [&](RootBranch rb) {
        BranchSpec s;
        s.series_case = c;
        s.lambda = lambda;
        s.root_branch = rb;
        return s;
    };
    if (c == SeriesCase::C165) {
        for (RootBranch rb : {RootBranch::plus, RootBranch::minus}) {
            for (unsigned fr = 0; fr <= (complex_branches ? 1U : 0U); ++fr) {
                for (int xs : {1, -1}) {
                    BranchSpec s = make(rb);
                    s.fourth_root = fr;
                    s.x_sign = xs;
                    nominal.push_back(s);
                }
            }
        }
    } else {
        nominal.push_back(make(RootBranch::zero));
        for (RootBranch rb : {RootBranch::plus, RootBranch::minus}) {
            for (int rs : {1, -1}) {
                BranchSpec s = make(rb);
                s.residue_sign = rs;
                nominal.push_back(s);
            }
        }
    }

    constexpr int probe_N = 6;
    BranchEnumeration out;
    std::vector<RecurrenceState> kept;
    for (const auto &spec : nominal) {
        RecurrenceState coeffs;
        try {
            coeffs = build_series(spec, probe_N).coeffs;
        } catch (const Error &e) {
            out.incompatible.emplace_back(spec, e.what());
            continue;
        }
        bool duplicate = false;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (same_coefficients(coeffs, kept[i])) {
                out.merged.emplace_back(spec, out.distinct[i]);
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            out.distinct.push_back(spec);
            kept.push_back(std::move(coeffs));
        }
    }
    return out;
}

std::vector<BranchSpec> enumerate_branches(SeriesCase c, const Scalar &lambda, bool complex_branches)
{
    return enumerate_branches_detailed(c, lambda, complex_branches).distinct;
}

} // namespace painleve
