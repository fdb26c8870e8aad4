#ifndef PAINLEVE_CONVERGENCE_HPP
#define PAINLEVE_CONVERGENCE_HPP

#include <string>
#include <utility>

#include <painleve/laurent_series.hpp>

namespace painleve
{

struct CertificateAudit {
    std::string first_bound;  // |x_k| <= ... template
    std::string second_bound; // |y_k| <= ...
    Scalar lambda_abs;
    Scalar c1_abs;      // C165 only
    Scalar coupling;    // C43: rational upper bound used for 2 sqrt(6)
    Scalar prefix_max;  // max |coefficient| over -1 <= n <= prefix
    Scalar root_bound;  // Cauchy bound past which both factors stay <= 1
    Scalar first_factor;  // factors at k = N + 1
    Scalar second_factor;
};

struct ConvergenceCertificate {
    Scalar M;
    int N = 0; // induction threshold
    Scalar epsilon;
    int checked_prefix = 0;
    bool certified = false;
    std::string reason;
    CertificateAudit audit;
};

// Right-hand sides of the step-k coefficient bounds given |coefficients| <= M
// below k. C165 uses the printed inequalities; C43 the same template derived
// from the inverse of its 2x2 step matrix. Throws ContractViolation at
// singular steps.
std::pair<Scalar, Scalar> bound_step(int k, const Scalar &M, const Scalar &lambda, const Scalar &c1_abs,
                                     SeriesCase c);

// M_limit defaults to 2^10. Throws ContractViolation for N < 10 or
// epsilon outside (0, 1); InsufficientPrefix when the series stops before
// the induction threshold.
ConvergenceCertificate certify(const SeriesBuild &build, const Scalar &epsilon, const Scalar &M_limit = Scalar(1024));

struct TailCheck {
    int N = 0;
    BigFloat difference; // max over x and y of |S_2N - S_N| at t
    BigFloat bound;      // M |t|^N / (1 - |t|)
    bool holds = false;
};

// Partial sums of the regular brackets at t with 2N <= the series prefix.
TailCheck geometric_tail_check(const SeriesBuild &build, const ConvergenceCertificate &cert, const Scalar &t, int N);

} // namespace painleve

#endif
