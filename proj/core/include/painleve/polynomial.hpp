#ifndef PAINLEVE_POLYNOMIAL_HPP
#define PAINLEVE_POLYNOMIAL_HPP

#include <vector>

#include <painleve/scalar.hpp>

namespace painleve
{

// Dense univariate polynomial, coefficients in increasing degree.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs);

    // c0 + c1 r + c2 r^2 ...
    static Polynomial from(std::initializer_list<Scalar> coeffs) { return Polynomial(std::vector<Scalar>(coeffs)); }

    const std::vector<Scalar> &coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

    Scalar operator()(const Scalar &r) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator-(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Scalar &s, const Polynomial &a);

private:
    void trim();

    std::vector<Scalar> coeffs_;
};

// All complex roots with multiplicity (Aberth iteration, Newton polish) at
// the precision of the coefficients.
std::vector<Scalar> roots(const Polynomial &p);

// Cauchy bound: every root satisfies |r| < 1 + max_i |c_i / c_n|.
BigFloat cauchy_root_bound(const Polynomial &p);

} // namespace painleve

#endif
