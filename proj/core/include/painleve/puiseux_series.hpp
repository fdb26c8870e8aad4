#ifndef PAINLEVE_PUISEUX_SERIES_HPP
#define PAINLEVE_PUISEUX_SERIES_HPP

#include <vector>

#include <gmpxx.h>

#include <painleve/scalar.hpp>

namespace painleve
{

// Truncated series  sum_i c_i (t - t0)^(lead + i/den) + O((t - t0)^order)
// with den in {1, 2}. The order is tracked through arithmetic so that every
// coefficient a result exposes is actually determined by its inputs.
class PuiseuxSeries
{
public:
    PuiseuxSeries();
    PuiseuxSeries(mpq_class lead, unsigned den, std::vector<Scalar> coeffs, Scalar center = Scalar(0));

    // Identically zero through order `order`.
    static PuiseuxSeries zero(const mpq_class &order, unsigned den = 1);
    // t^exponent with an error term at t^order.
    static PuiseuxSeries monomial(const Scalar &coeff, const mpq_class &exponent, const mpq_class &order,
                                  unsigned den = 1);

    const mpq_class &lead() const { return lead_; }
    unsigned den() const { return den_; }
    mpq_class step() const { return mpq_class(1, den_); }
    const std::vector<Scalar> &coeffs() const { return coeffs_; }
    const Scalar &center() const { return center_; }
    // Exclusive exponent bound: coefficients below it are exact.
    mpq_class order() const;
    // order - lead, in units of t
    mpq_class trunc_order() const { return order() - lead_; }

    std::size_t size() const { return coeffs_.size(); }
    mpq_class exponent(std::size_t i) const
    {
        mpq_class offset(static_cast<long>(i), den_);
        offset.canonicalize();
        return lead_ + offset;
    }
    // Coefficient of t^e; zero off-grid or below lead. Throws at or beyond order().
    Scalar coeff_at(const mpq_class &e) const;

    bool is_zero() const;
    unsigned bits() const;

    PuiseuxSeries with_den(unsigned den) const;
    PuiseuxSeries with_center(const Scalar &t0) const;
    // Drops terms at or beyond `order` (which must not exceed order()).
    PuiseuxSeries truncated(const mpq_class &order) const;
    // Strips exact-zero leading coefficients.
    PuiseuxSeries normalized() const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator-(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator*(const Scalar &s, const PuiseuxSeries &a);

    PuiseuxSeries derivative() const;
    PuiseuxSeries pow(unsigned n) const;

    // Sum of all stored terms at t (principal branch for half-integer powers).
    Scalar evaluate(const Scalar &t) const;

    BigFloat max_abs_coeff() const;

private:
    mpq_class lead_;
    unsigned den_ = 1;
    std::vector<Scalar> coeffs_;
    Scalar center_;
};

} // namespace painleve

#endif
