#include <painleve/convergence.hpp>

#include <algorithm>

#include <mpfr.h>

#include <painleve/errors.hpp>
#include <painleve/polynomial.hpp>

namespace painleve
{

namespace
{

// Rational upper bound for 2 sqrt(6) = 4.898979...
const Scalar two_sqrt6_upper(49, 10);

Scalar abs_value(const Scalar &v)
{
    if (v.is_exact()) {
        return Scalar(abs(v.rational()));
    }
    return Scalar(v.magnitude());
}

// Factor polynomials g(k) = denominator - numerator / M; both factors are
// <= 1 exactly where g >= 0 (k >= 5, where every denominator is positive).
std::pair<Polynomial, Polynomial> factor_gaps(SeriesCase c, const Scalar &M, const Scalar &lambda_abs,
                                              const Scalar &c1_abs)
{
    const Polynomial k = Polynomial::from({Scalar(0), Scalar(1)});
    const Polynomial one = Polynomial::from({Scalar(1)});
    if (c == SeriesCase::C165) {
        const Polynomial den1 = k * k - Scalar(4) * one;
        const Polynomial num1 = Scalar(2) * M * (k + one) + (lambda_abs + Scalar(2) * c1_abs) * one;
        const Polynomial den2 = Scalar(5) * (k * k - k - Scalar(12) * one);
        const Polynomial num2 = Scalar(21) * M * k + (Scalar(26) * M + Scalar(5)) * one;
        return {den1 - num1, den2 - num2};
    }
    const Polynomial u = k * k - k;
    const Polynomial det = (u - Scalar(2) * one) * (u - Scalar(12) * one);
    const Polynomial r1 = lambda_abs * one + Scalar(2) * M * (k + one);
    const Polynomial r2 = one + Scalar(7, 3) * M * (k + one);
    const Polynomial p = u - Scalar(6) * one;
    const Polynomial q = u - Scalar(8) * one;
    return {det - (q * r1 + two_sqrt6_upper * r2), det - (two_sqrt6_upper * r1 + p * r2)};
}

bool nonnegative(const Scalar &v)
{
    return v.real().sign() >= 0;
}

Scalar power_of_two_at_least(const BigFloat &v)
{
    long e = v.is_zero() ? 0 : v.exponent2();
    if (!v.is_zero() && BigFloat::pow2(e - 1, v.bits()) >= v) {
        --e;
    }
    mpq_class q(1);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q = p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q = mpq_class(1) / p;
    }
    return Scalar(q);
}

} // namespace

std::pair<Scalar, Scalar> bound_step(int k, const Scalar &M, const Scalar &lambda, const Scalar &c1_abs,
                                     SeriesCase c)
{
    const Scalar kk(k);
    const Scalar lam = abs_value(lambda);
    if (c == SeriesCase::C165) {
        const Scalar d1 = abs_value(kk * kk - Scalar(4));
        const Scalar d2 = abs_value(kk * kk - kk - Scalar(12));
        if (d1.is_zero() || d2.is_zero()) {
            throw ContractViolation("bound_step: singular step k=" + std::to_string(k));
        }
        const Scalar first = (Scalar(2) * M * (kk + Scalar(1)) + lam + Scalar(2) * c1_abs) / d1 * M;
        const Scalar second = (Scalar(21) * M * kk + Scalar(26) * M + Scalar(5)) / (Scalar(5) * d2) * M;
        return {first, second};
    }
    const Scalar det = abs_value(step_determinant(c, k));
    if (det.is_zero()) {
        throw ContractViolation("bound_step: singular step k=" + std::to_string(k));
    }
    const Scalar u = kk * kk - kk;
    const Scalar r1 = lam * M + Scalar(2) * (kk + Scalar(1)) * M * M;
    const Scalar r2 = M + Scalar(7, 3) * (kk + Scalar(1)) * M * M;
    const Scalar p = abs_value(u - Scalar(6));
    const Scalar q = abs_value(u - Scalar(8));
    return {(q * r1 + two_sqrt6_upper * r2) / det, (two_sqrt6_upper * r1 + p * r2) / det};
}

ConvergenceCertificate certify(const SeriesBuild &build, const Scalar &epsilon, const Scalar &M_limit)
{
    if (build.N < 10) {
        throw ContractViolation("certify needs a series with N >= 10 (got " + std::to_string(build.N) + ")");
    }
    if (!epsilon.is_real() || !(epsilon.real().sign() > 0) || !(epsilon.real() < BigFloat(1, epsilon.bits()))) {
        throw ContractViolation("epsilon must lie in (0, 1)");
    }
    const SeriesCase c = build.spec.series_case;
    ConvergenceCertificate cert;
    cert.epsilon = epsilon;
    cert.checked_prefix = build.N;

    CertificateAudit &audit = cert.audit;
    audit.lambda_abs = abs_value(build.spec.lambda);
    if (c == SeriesCase::C165) {
        audit.first_bound = "|a_k| <= (2M(k+1) + |lambda| + 2|c1|) / |k^2-4| * M";
        audit.second_bound = "|b_k| <= (21Mk + 26M + 5) / (5|k^2-k-12|) * M, valid for M >= |c1|";
        audit.c1_abs = abs_value(build.coeffs.x_at(-2));
    } else {
        audit.first_bound = "|d_k| <= (|k^2-k-8| R1 + s R2) / |det_k|";
        audit.second_bound = "|f_k| <= (s R1 + |k^2-k-6| R2) / |det_k|, R1 = |lambda|M + 2(k+1)M^2, "
                             "R2 = M + (7/3)(k+1)M^2, det_k = (k^2-k-2)(k^2-k-12), s >= 2 sqrt(6)";
        audit.coupling = two_sqrt6_upper;
    }

    BigFloat prefix(Scalar::default_bits);
    for (int n = -1; n <= build.N; ++n) {
        prefix = max(prefix, max(build.coeffs.x_at(n).magnitude(), build.coeffs.y_at(n).magnitude()));
    }
    audit.prefix_max = Scalar(prefix);
    const BigFloat needed = c == SeriesCase::C165 ? max(prefix, audit.c1_abs.magnitude()) : prefix;
    cert.M = power_of_two_at_least(needed);

    if (cert.M.magnitude() > M_limit.magnitude()) {
        cert.reason = "prefix bound " + Scalar(needed).to_string(6) + " needs M = " + cert.M.to_string()
                      + " above the search limit " + M_limit.to_string();
        return cert;
    }

    const auto [g1, g2] = factor_gaps(c, cert.M, audit.lambda_abs, audit.c1_abs);
    const BigFloat bound = max(cauchy_root_bound(g1), cauchy_root_bound(g2));
    audit.root_bound = Scalar(bound);
    BigFloat ceiling(bound.bits());
    mpfr_ceil(ceiling.get(), bound.get());
    const long last = std::max(5L, static_cast<long>(ceiling.to_double()));

    // Smallest N >= 4 such that every k in (N, last] closes; beyond `last`
    // both gaps are positive.
    long n_ind = last;
    for (long k = last; k >= 5; --k) {
        const Scalar kk(k);
        if (!nonnegative(g1(kk)) || !nonnegative(g2(kk))) {
            break;
        }
        n_ind = k - 1;
    }
    cert.N = static_cast<int>(std::max(n_ind, 4L));
    const auto [f1, f2] = bound_step(cert.N + 1, cert.M, build.spec.lambda, audit.c1_abs, c);
    audit.first_factor = f1 / cert.M;
    audit.second_factor = f2 / cert.M;

    if (cert.N > build.N) {
        throw InsufficientPrefix(cert.N, build.N);
    }
    cert.certified = true;
    cert.reason = "prefix bounded by M and the induction closes for all k > N";
    return cert;
}

TailCheck geometric_tail_check(const SeriesBuild &build, const ConvergenceCertificate &cert, const Scalar &t, int N)
{
    if (N < 1 || 2 * N > build.N) {
        throw ContractViolation("tail check needs 1 <= N and 2N <= series prefix");
    }
    TailCheck out;
    out.N = N;
    out.difference = BigFloat(t.bits());
    for (const auto *coeffs : {&build.coeffs.x, &build.coeffs.y}) {
        Scalar tail;
        Scalar power = pow(t, N + 1);
        for (int n = N + 1; n <= 2 * N; ++n) {
            tail += (*coeffs)[static_cast<std::size_t>(n + 2)] * power;
            power *= t;
        }
        out.difference = max(out.difference, tail.magnitude());
    }
    const BigFloat r = t.magnitude();
    const BigFloat one(1, r.bits());
    out.bound = cert.M.magnitude() * pow(r, BigFloat(N, r.bits())) / (one - r);
    out.holds = out.difference <= out.bound;
    return out;
}

} // namespace painleve
