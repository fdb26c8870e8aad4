#include <painleve/polynomial.hpp>

#include <algorithm>

#include <painleve/errors.hpp>

namespace painleve
{

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_exact() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Scalar Polynomial::operator()(const Scalar &r) const
{
    Scalar acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * r + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(Scalar(static_cast<long>(i)) * coeffs_[i]);
    }
    return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial &a, const Polynomial &b)
{
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        c[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        c[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b)
{
    return a + Scalar(-1) * b;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return Polynomial();
    }
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar &s, const Polynomial &a)
{
    std::vector<Scalar> c = a.coeffs_;
    for (auto &x : c) {
        x = s * x;
    }
    return Polynomial(std::move(c));
}

BigFloat cauchy_root_bound(const Polynomial &p)
{
    if (p.degree() < 1) {
        throw ContractViolation("cauchy_root_bound needs degree >= 1");
    }
    const BigFloat lead = p.leading().magnitude();
    BigFloat m(lead.bits());
    for (int i = 0; i < p.degree(); ++i) {
        m = max(m, p.coeffs()[static_cast<std::size_t>(i)].magnitude() / lead);
    }
    return m + BigFloat(1, lead.bits());
}

std::vector<Scalar> roots(const Polynomial &p)
{
    const int n = p.degree();
    if (n < 1) {
        return {};
    }
    unsigned bits = Scalar::default_bits;
    for (const auto &c : p.coeffs()) {
        bits = std::max(bits, c.bits());
    }
    if (n == 1) {
        return {-p.coeffs()[0] / p.coeffs()[1]};
    }
    const Polynomial dp = p.derivative();

    // Initial guesses on a slightly irregular circle inside the Cauchy bound.
    const BigFloat radius = cauchy_root_bound(p) * BigFloat::from_double(0.5, bits);
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat(2, bits);
    std::vector<Scalar> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const BigFloat angle = two_pi * BigFloat(k, bits) / BigFloat(n, bits) + BigFloat::from_double(0.4, bits);
        z[static_cast<std::size_t>(k)] = Scalar(radius * cos(angle), radius * sin(angle));
    }

    const BigFloat converged = BigFloat::pow2(-static_cast<long>(bits) + 16, bits);
    for (int iter = 0; iter < 2000; ++iter) {
        BigFloat worst(bits);
        for (std::size_t i = 0; i < z.size(); ++i) {
            const Scalar pv = p(z[i]);
            if (pv.is_zero()) {
                continue;
            }
            const Scalar ratio = pv / dp(z[i]);
            Scalar repulsion;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) {
                    repulsion += Scalar(1) / (z[i] - z[j]);
                }
            }
            const Scalar step = ratio / (Scalar(1) - ratio * repulsion);
            z[i] -= step;
            worst = max(worst, step.magnitude() / max(z[i].magnitude(), BigFloat(1, bits)));
        }
        if (worst < converged) {
            break;
        }
    }
    // Newton polish for simple roots; skipped where the derivative vanishes.
    for (auto &r : z) {
        for (int k = 0; k < 3; ++k) {
            const Scalar d = dp(r);
            if (d.is_zero()) {
                break;
            }
            r -= p(r) / d;
        }
    }
    return z;
}

} // namespace painleve
