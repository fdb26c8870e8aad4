#ifndef PAINLEVE_TESTS_ORACLES_HPP
#define PAINLEVE_TESTS_ORACLES_HPP

#include <string>
#include <vector>

#include <painleve/laurent_series.hpp>
#include <painleve/polynomial.hpp>
#include <painleve/puiseux_series.hpp>
#include <painleve/scalar.hpp>
#include <painleve/subequation.hpp>

// Reference computations that avoid the closed forms under test.
namespace painleve::oracle
{

// Left-null combination of the k = 2 step once every lower coefficient is
// fixed by the recurrence. c1 is the x leading coefficient (C165), f_m1 the
// residue of y (C43).
Scalar c165_k2_residual(const Scalar &lambda, const Scalar &c1);
Scalar c43_k2_residual(const Scalar &lambda, const Scalar &f_m1);

// The k = 2 compatibility residual written as a polynomial in c1^4 (after
// dividing by c1) and in f_m1^2, recovered by interpolation through exact or
// rounded sample points. `check` receives the worst mismatch at extra points.
Polynomial c165_compatibility(const Scalar &lambda, BigFloat *check = nullptr);
Polynomial c43_compatibility(const Scalar &lambda, BigFloat *check = nullptr);

// The k = 2 compatibility pair in (c1^4, b2) in closed polynomial form, b2 eliminated.
Polynomial eliminated_system(const Scalar &lambda);

// Real roots in increasing order; imaginary parts below 2^-(bits/2) are dropped.
std::vector<Scalar> real_roots(const Polynomial &p);

// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Scalar> &xs, const std::vector<Scalar> &ys);

// Laurent series of the Weierstrass function around its pole, with `terms`
// slots starting at t^-2.
PuiseuxSeries weierstrass_series(const Scalar &g2, const Scalar &g3, int terms);

// y_t^2 evaluated two ways at rho = r > 0: by the chain rule from the quartic
// and from the report. Returns the difference.
Scalar quartic_pointwise_gap(const QuarticForm &q, const QuarticReport &report, const Scalar &r);

PuiseuxSeries load_series_fixture(const std::string &name);
std::string data_path(const std::string &name);

} // namespace painleve::oracle

#endif
