#include <painleve/integrator.hpp>

#include <algorithm>
#include <vector>

#include <painleve/errors.hpp>

namespace painleve
{

namespace
{

// Taylor coefficient k of x^i y^j given the coefficient sequences of x and y.
Scalar monomial_coeff(int i, int j, const std::vector<Scalar> &X, const std::vector<Scalar> &Y, std::size_t k)
{
    auto cauchy = [k](const std::vector<Scalar> &A, const std::vector<Scalar> &B) {
        Scalar acc;
        for (std::size_t m = 0; m <= k; ++m) {
            acc += A[m] * B[k - m];
        }
        return acc;
    };
    switch (i * 3 + j) {
    case 0: return k == 0 ? Scalar(1) : Scalar(0);
    case 1: return Y[k];
    case 3: return X[k];
    case 2: return cauchy(Y, Y);
    case 4: return cauchy(X, Y);
    case 6: return cauchy(X, X);
    default: throw ContractViolation("integrator supports polynomials of total degree <= 2");
    }
}

Scalar rhs_coeff(const BivariatePolynomial &p, const std::vector<Scalar> &X, const std::vector<Scalar> &Y,
                 std::size_t k)
{
    Scalar acc;
    for (const auto &[m, c] : p.terms()) {
        acc += c * monomial_coeff(m.first, m.second, X, Y, k);
    }
    return acc;
}

Scalar horner(const std::vector<Scalar> &c, const Scalar &h)
{
    Scalar acc;
    for (std::size_t n = c.size(); n-- > 0;) {
        acc = acc * h + c[n];
    }
    return acc;
}

Scalar horner_derivative(const std::vector<Scalar> &c, const Scalar &h)
{
    Scalar acc;
    for (std::size_t n = c.size(); n-- > 1;) {
        acc = acc * h + Scalar(static_cast<long>(n)) * c[n];
    }
    return acc;
}

} // namespace

IntegrationResult integrate_numeric(const PolynomialODESystem &sys, const PhaseState &s0, const Scalar &t_end,
                                    const Scalar &tol, const IntegratorOptions &options)
{
    if (options.order < 8) {
        throw ContractViolation("integrator order must be at least 8");
    }
    if (sys.rhs_x.total_degree() > 2 || sys.rhs_y.total_degree() > 2) {
        throw ContractViolation("integrator supports polynomials of total degree <= 2");
    }
    if (!t_end.is_real() || !s0.t.is_real()) {
        throw ContractViolation("integration runs along a real time segment");
    }
    const unsigned bits = std::max({s0.x.bits(), s0.y.bits(), t_end.bits(), tol.bits()});
    const BigFloat tol_mag = tol.magnitude();
    if (!(tol_mag > BigFloat(bits))) {
        throw ContractViolation("integrator tolerance must be positive");
    }

    const std::size_t p = options.order;
    const BigFloat total = abs(t_end.real() - s0.t.real());
    const BigFloat h_floor = total * BigFloat::pow2(-40, bits);
    const int direction = (t_end.real() - s0.t.real()).sign();

    IntegrationResult out;
    out.state = s0;
    const Scalar h0 = energy(sys, s0);

    std::vector<Scalar> X(p + 1), Y(p + 1);
    while (true) {
        const BigFloat remaining = abs(t_end.real() - out.state.t.real());
        if (remaining.is_zero()) {
            break;
        }
        if (out.steps >= options.max_steps) {
            throw SingularityApproach("integrator exceeded its step budget");
        }
        X[0] = out.state.x;
        X[1] = out.state.xt;
        Y[0] = out.state.y;
        Y[1] = out.state.yt;
        for (std::size_t k = 0; k + 2 <= p; ++k) {
            const Scalar scale(static_cast<long>((k + 1) * (k + 2)));
            X[k + 2] = rhs_coeff(sys.rhs_x, X, Y, k) / scale;
            Y[k + 2] = rhs_coeff(sys.rhs_y, X, Y, k) / scale;
        }

        BigFloat h = remaining;
        for (std::size_t n : {p - 1, p}) {
            for (const auto *seq : {&X, &Y}) {
                const BigFloat c = (*seq)[n].magnitude();
                if (c.is_zero()) {
                    continue;
                }
                const BigFloat limit = root(tol_mag / c, static_cast<unsigned long>(n));
                h = std::min(h, limit * BigFloat::from_double(0.9, bits), [](const BigFloat &a, const BigFloat &b) {
                    return a < b;
                });
            }
        }
        if (h < h_floor && h < remaining) {
            throw SingularityApproach("singularity-approach: step size collapsed near t=" + out.state.t.to_string(20));
        }
        const Scalar step(direction < 0 ? -h : h);
        out.state.x = horner(X, step);
        out.state.xt = horner_derivative(X, step);
        out.state.y = horner(Y, step);
        out.state.yt = horner_derivative(Y, step);
        out.state.t = (h == remaining) ? t_end : out.state.t + step;
        ++out.steps;
    }
    out.energy_drift = (energy(sys, out.state) - h0).magnitude();
    return out;
}

} // namespace painleve
