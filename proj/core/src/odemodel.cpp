#include <painleve/odemodel.hpp>

#include <algorithm>

#include <painleve/errors.hpp>

namespace painleve
{

void BivariatePolynomial::add_term(int i, int j, const Scalar &coeff)
{
    if (i < 0 || j < 0) {
        throw ContractViolation("negative exponent in polynomial term");
    }
    auto [it, inserted] = terms_.try_emplace({i, j}, coeff);
    if (!inserted) {
        it->second += coeff;
    }
    if (it->second.is_exact() && it->second.is_zero()) {
        terms_.erase(it);
    }
}

Scalar BivariatePolynomial::coeff(int i, int j) const
{
    const auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
}

int BivariatePolynomial::total_degree() const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.first + m.second);
    }
    return d;
}

Scalar BivariatePolynomial::evaluate(const Scalar &x, const Scalar &y) const
{
    Scalar acc;
    for (const auto &[m, c] : terms_) {
        acc += c * pow(x, m.first) * pow(y, m.second);
    }
    return acc;
}

PuiseuxSeries BivariatePolynomial::evaluate(const PuiseuxSeries &x, const PuiseuxSeries &y) const
{
    // Start from an exact zero valid through the lower of the two input orders
    // shifted to wherever the monomials land; addition keeps the minimum.
    PuiseuxSeries acc;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        PuiseuxSeries term;
        if (m.first == 0 && m.second == 0) {
            const mpq_class order = std::min(x.order(), y.order()) + 64; // constants are exact
            term = PuiseuxSeries::monomial(c, 0, std::max(order, mpq_class(1)), std::max(x.den(), y.den()))
                       .with_center(x.center());
        } else {
            bool have = false;
            for (int k = 0; k < m.first; ++k) {
                term = have ? term * x : x;
                have = true;
            }
            for (int k = 0; k < m.second; ++k) {
                term = have ? term * y : y;
                have = true;
            }
            term = c * term;
        }
        acc = first ? term : acc + term;
        first = false;
    }
    if (first) {
        return PuiseuxSeries::zero(std::min(x.order(), y.order()), std::max(x.den(), y.den())).with_center(x.center());
    }
    return acc;
}

BivariatePolynomial BivariatePolynomial::d_dx() const
{
    BivariatePolynomial d;
    for (const auto &[m, c] : terms_) {
        if (m.first > 0) {
            d.add_term(m.first - 1, m.second, Scalar(m.first) * c);
        }
    }
    return d;
}

BivariatePolynomial BivariatePolynomial::d_dy() const
{
    BivariatePolynomial d;
    for (const auto &[m, c] : terms_) {
        if (m.second > 0) {
            d.add_term(m.first, m.second - 1, Scalar(m.second) * c);
        }
    }
    return d;
}

BivariatePolynomial BivariatePolynomial::operator-() const
{
    BivariatePolynomial r;
    for (const auto &[m, c] : terms_) {
        r.add_term(m.first, m.second, -c);
    }
    return r;
}

bool operator==(const BivariatePolynomial &a, const BivariatePolynomial &b)
{
    return a.terms_ == b.terms_;
}

PolynomialODESystem build_henon_heiles(const Scalar &C, const Scalar &lambda)
{
    if (!C.is_finite() || !lambda.is_finite()) {
        throw ContractViolation("build_henon_heiles: non-finite parameter");
    }
    PolynomialODESystem sys{lambda, C, {}, {}, {}};
    sys.rhs_x.add_term(1, 0, -lambda);
    sys.rhs_x.add_term(1, 1, Scalar(-2));
    sys.rhs_y.add_term(0, 1, Scalar(-1));
    sys.rhs_y.add_term(2, 0, Scalar(-1));
    sys.rhs_y.add_term(0, 2, C);
    sys.potential.add_term(2, 0, lambda / Scalar(2));
    sys.potential.add_term(0, 2, Scalar(1, 2));
    sys.potential.add_term(2, 1, Scalar(1));
    sys.potential.add_term(0, 3, -C / Scalar(3));
    return sys;
}

Scalar energy(const PolynomialODESystem &sys, const PhaseState &s)
{
    const Scalar kinetic = (s.xt * s.xt + s.yt * s.yt) / Scalar(2);
    return kinetic + sys.potential.evaluate(s.x, s.y);
}

FourthOrderForm reduce_to_fourth_order(const PolynomialODESystem &sys, const Scalar &H)
{
    return FourthOrderForm{sys.C, sys.lambda, H};
}

PuiseuxSeries FourthOrderForm::residual(const PuiseuxSeries &y) const
{
    const PuiseuxSeries y1 = y.derivative();
    const PuiseuxSeries y2 = y1.derivative();
    const PuiseuxSeries y4 = y2.derivative().derivative();
    PuiseuxSeries rhs = coeff_ytt_y() * (y2 * y) + coeff_ytt() * y2 + coeff_yt2() * (y1 * y1)
                        + coeff_y3() * (y * y * y) + coeff_y2() * (y * y) + coeff_y() * y;
    const mpq_class order = std::min(rhs.order(), y4.order());
    rhs = rhs + PuiseuxSeries::monomial(coeff_const(), 0, std::max(order, mpq_class(1)), y.den()).with_center(y.center());
    return y4 - rhs;
}

namespace
{

void check_pair(const PuiseuxSeries &xs, const PuiseuxSeries &ys)
{
    if (xs.trunc_order() != ys.trunc_order()) {
        throw ContractViolation("series pair with mismatched truncation orders");
    }
    if (!(xs.center() == ys.center())) {
        throw ContractViolation("series pair with different centers");
    }
}

} // namespace

std::pair<PuiseuxSeries, PuiseuxSeries> residual_of_series(const PolynomialODESystem &sys, const PuiseuxSeries &xs,
                                                           const PuiseuxSeries &ys)
{
    check_pair(xs, ys);
    const PuiseuxSeries xtt = xs.derivative().derivative();
    const PuiseuxSeries ytt = ys.derivative().derivative();
    PuiseuxSeries rx = xtt - sys.rhs_x.evaluate(xs, ys);
    PuiseuxSeries ry = ytt - sys.rhs_y.evaluate(xs, ys);
    // x-residual may not extend past the lowest order the derivative knows
    rx = rx.truncated(std::min(rx.order(), xtt.order()));
    ry = ry.truncated(std::min(ry.order(), ytt.order()));
    return {rx, ry};
}

PuiseuxSeries energy_series(const PolynomialODESystem &sys, const PuiseuxSeries &xs, const PuiseuxSeries &ys)
{
    check_pair(xs, ys);
    const PuiseuxSeries xt = xs.derivative();
    const PuiseuxSeries yt = ys.derivative();
    const PuiseuxSeries kinetic = Scalar(1, 2) * (xt * xt + yt * yt);
    return kinetic + sys.potential.evaluate(xs, ys);
}

BigFloat max_nonconstant(const PuiseuxSeries &s)
{
    BigFloat m(s.bits());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.exponent(i) != 0) {
            m = max(m, s.coeffs()[i].magnitude());
        }
    }
    return m;
}

Scalar constant_term(const PuiseuxSeries &s)
{
    if (s.order() <= 0) {
        throw ContractViolation("series too short to determine its constant term");
    }
    return s.coeff_at(0);
}

PhaseState state_from_series(const PuiseuxSeries &xs, const PuiseuxSeries &ys, const Scalar &t)
{
    return PhaseState{xs.evaluate(t), xs.derivative().evaluate(t), ys.evaluate(t), ys.derivative().evaluate(t), t};
}

} // namespace painleve
