#ifndef PAINLEVE_LAURENT_SERIES_HPP
#define PAINLEVE_LAURENT_SERIES_HPP

#include <array>
#include <string>
#include <vector>

#include <painleve/dense_matrix.hpp>
#include <painleve/odemodel.hpp>
#include <painleve/puiseux_series.hpp>
#include <painleve/scalar.hpp>

namespace painleve
{

// C165: C = -16/5, x = sqrt(t) (c1 t^-2 + sum a_k t^k), y = -15/8 t^-2 + sum b_k t^k.
// C43:  C = -4/3,  x = x_sign sqrt(6) t^-2 + sum d_k t^k, y = -3 t^-2 + sum f_k t^k.
enum class SeriesCase { C165, C43 };
enum class RootBranch { plus, minus, zero };
enum class Resolution { unique, freed_parameter, compatibility_constrained };

std::string to_string(SeriesCase c);
std::string to_string(RootBranch b);
std::string to_string(Resolution r);
SeriesCase parse_series_case(const std::string &text);
RootBranch parse_root_branch(const std::string &text);

Scalar series_C(SeriesCase c); // -16/5 or -4/3

struct BranchSpec {
    SeriesCase series_case = SeriesCase::C165;
    Scalar lambda;
    RootBranch root_branch = RootBranch::plus;
    int x_sign = 1;
    // C43 only: f_-1 = residue_sign * principal sqrt(f_-1^2).
    int residue_sign = 1;
    // C165 only: 0 takes the principal fourth root of c1^4, 1 rotates it by i.
    unsigned fourth_root = 0;
    // (a2, b4) for C165, (f2, f4) for C43.
    std::array<Scalar, 2> free_params{};
    Scalar t0;

    std::string label() const;
};

struct RecurrenceStep {
    int k = 0;
    DenseMatrix matrix;
    std::array<Scalar, 2> rhs{};
    Scalar det; // exact
    Resolution resolution = Resolution::unique;
    int freed_component = -1; // 0: x coefficient, 1: y coefficient
    std::array<Scalar, 2> solution{};
};

// Coefficients by integer index k >= -2 (slot k + 2); for C165 the x entries
// are the a_k of the bracket, so x's exponents are k + 1/2.
struct RecurrenceState {
    std::vector<Scalar> x;
    std::vector<Scalar> y;

    Scalar x_at(int k) const;
    Scalar y_at(int k) const;
    int last_index() const { return static_cast<int>(y.size()) - 3; }
};

struct SeriesBuild {
    BranchSpec spec;
    int N = 0;
    RecurrenceState coeffs;
    PuiseuxSeries x;
    PuiseuxSeries y;
    Scalar H;
    std::vector<RecurrenceStep> steps;
};

// 1125 (525 - 1680 lambda +- 4 sqrt(radicand)) / 167552
Scalar c1_fourth_power(const Scalar &lambda, RootBranch branch);
// 35 (2048 lambda^2 - 1280 lambda + 387)
Scalar c1_radicand(const Scalar &lambda);
// (105 - 140 lambda +- sqrt(7 (1216 lambda^2 - 1824 lambda + 783))) / 385, or 0
Scalar f_minus1_squared(const Scalar &lambda, RootBranch branch);

// Leading coefficients of x and y for the branch.
std::array<Scalar, 2> leading_coefficients(const BranchSpec &spec);

// Exact determinant of the step-k system, independent of branch.
Scalar step_determinant(SeriesCase c, int k);

// Matrix, right-hand side and determinant of step k, without solving.
RecurrenceStep assemble_step(const BranchSpec &spec, int k, const RecurrenceState &prior);

// Solves the step-k system given every coefficient of lower index.
// Throws CompatibilityViolation on an inconsistent singular step.
RecurrenceStep step_recurrence(const BranchSpec &spec, int k, const RecurrenceState &prior);

// Coefficients for -2 <= k <= N; N >= 5.
SeriesBuild build_series(const BranchSpec &spec, int N);

PolynomialODESystem system_for(const BranchSpec &spec);
BigFloat residual_max(const SeriesBuild &build);
BigFloat energy_drift_max(const SeriesBuild &build);

struct BranchEnumeration {
    std::vector<BranchSpec> distinct;
    std::vector<std::pair<BranchSpec, BranchSpec>> merged; // (dropped, identical kept)
    std::vector<std::pair<BranchSpec, std::string>> incompatible;
};

BranchEnumeration enumerate_branches_detailed(SeriesCase c, const Scalar &lambda, bool complex_branches = false);
std::vector<BranchSpec> enumerate_branches(SeriesCase c, const Scalar &lambda, bool complex_branches = false);

} // namespace painleve

#endif
