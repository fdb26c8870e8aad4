#ifndef PAINLEVE_ODEMODEL_HPP
#define PAINLEVE_ODEMODEL_HPP

#include <map>
#include <utility>

#include <painleve/puiseux_series.hpp>
#include <painleve/scalar.hpp>

namespace painleve
{

// Sparse polynomial in (x, y); keys are exponent pairs (i, j) for x^i y^j.
class BivariatePolynomial
{
public:
    using Monomial = std::pair<int, int>;

    BivariatePolynomial() = default;

    void add_term(int i, int j, const Scalar &coeff);
    Scalar coeff(int i, int j) const;
    const std::map<Monomial, Scalar> &terms() const { return terms_; }
    int total_degree() const;

    Scalar evaluate(const Scalar &x, const Scalar &y) const;
    PuiseuxSeries evaluate(const PuiseuxSeries &x, const PuiseuxSeries &y) const;

    BivariatePolynomial d_dx() const;
    BivariatePolynomial d_dy() const;
    BivariatePolynomial operator-() const;

    friend bool operator==(const BivariatePolynomial &a, const BivariatePolynomial &b);

private:
    std::map<Monomial, Scalar> terms_;
};

// x_tt = rhs_x(x, y),  y_tt = rhs_y(x, y)
struct PolynomialODESystem {
    Scalar lambda;
    Scalar C;
    BivariatePolynomial rhs_x;
    BivariatePolynomial rhs_y;
    // V with rhs = -grad V for the canonical system
    BivariatePolynomial potential;

    std::pair<Scalar, Scalar> rhs(const Scalar &x, const Scalar &y) const
    {
        return {rhs_x.evaluate(x, y), rhs_y.evaluate(x, y)};
    }
};

struct PhaseState {
    Scalar x;
    Scalar xt;
    Scalar y;
    Scalar yt;
    Scalar t;
};

// Generalized Henon-Heiles: x_tt = -lambda x - 2xy,  y_tt = -y - x^2 + C y^2.
PolynomialODESystem build_henon_heiles(const Scalar &C, const Scalar &lambda);

// (x_t^2 + y_t^2 + lambda x^2 + y^2)/2 + x^2 y - (C/3) y^3
Scalar energy(const PolynomialODESystem &sys, const PhaseState &s);

// Scalar fourth-order equation satisfied by y:
//   y'''' = (2C-8) y'' y - (4 lambda + 1) y'' + 2(C+1) y'^2 + (20C/3) y^3
//           + (4 C lambda - 6) y^2 - 4 lambda y - 4H
struct FourthOrderForm {
    Scalar C;
    Scalar lambda;
    Scalar H;

    Scalar coeff_ytt_y() const { return Scalar(2) * C - Scalar(8); }
    Scalar coeff_ytt() const { return -(Scalar(4) * lambda + Scalar(1)); }
    Scalar coeff_yt2() const { return Scalar(2) * (C + Scalar(1)); }
    Scalar coeff_y3() const { return Scalar(20) * C / Scalar(3); }
    Scalar coeff_y2() const { return Scalar(4) * C * lambda - Scalar(6); }
    Scalar coeff_y() const { return Scalar(-4) * lambda; }
    Scalar coeff_const() const { return Scalar(-4) * H; }

    // y'''' minus the right-hand side, as a series.
    PuiseuxSeries residual(const PuiseuxSeries &y) const;
};

FourthOrderForm reduce_to_fourth_order(const PolynomialODESystem &sys, const Scalar &H);

// (x_tt - rhs_x, y_tt - rhs_y). Both inputs must share center and truncation
// order; the result carries every coefficient the truncation determines.
std::pair<PuiseuxSeries, PuiseuxSeries> residual_of_series(const PolynomialODESystem &sys, const PuiseuxSeries &xs,
                                                           const PuiseuxSeries &ys);

// H(x(t), y(t)) as a formal series.
PuiseuxSeries energy_series(const PolynomialODESystem &sys, const PuiseuxSeries &xs, const PuiseuxSeries &ys);

// Largest |coefficient| of the non-constant terms of an energy series.
BigFloat max_nonconstant(const PuiseuxSeries &s);
// Coefficient of t^0 (zero if the series has no such slot below its order).
Scalar constant_term(const PuiseuxSeries &s);

// Phase state obtained by summing the series and its derivative at t.
PhaseState state_from_series(const PuiseuxSeries &xs, const PuiseuxSeries &ys, const Scalar &t);

} // namespace painleve

#endif
