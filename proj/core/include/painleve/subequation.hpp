#ifndef PAINLEVE_SUBEQUATION_HPP
#define PAINLEVE_SUBEQUATION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <painleve/laurent_series.hpp>
#include <painleve/puiseux_series.hpp>

namespace painleve
{

// sum_{k=0}^{m} sum_{j=0}^{2m-2k} h_jk y^j (y')^k = 0
struct SubequationAnsatz {
    int m = 2;
    std::map<std::pair<int, int>, Scalar> h; // (j, k) -> h_jk

    static std::vector<std::pair<int, int>> index_set(int m);
    Scalar at(int j, int k) const;
    bool is_trivial() const;
    // Same relation rescaled so h_jk = 1; throws if h_jk is zero.
    SubequationAnsatz scaled_to(int j, int k) const;
    PuiseuxSeries residual(const PuiseuxSeries &y) const;
};

struct FitResult {
    int match_order = 0;
    int raw_nullspace_dim = 0; // before re-verification
    int nullspace_dim = 0;
    std::vector<SubequationAnsatz> basis;
    std::vector<int> residual_orders; // consecutive vanishing powers from the most negative one
};

// Number of consecutive powers of t, starting at the most negative one of the
// ansatz, that every y^j (y')^k term determines.
int available_match_order(const PuiseuxSeries &y, int m);

// Throws ContractViolation for a half-integer step, m outside 1..4,
// match_order below unknowns + 2, or beyond available_match_order.
FitResult fit(const PuiseuxSeries &y, int m, int match_order);

// rho_t^2 = (A rho^4 + G rho^3 + B rho^2 + E rho + Cq) / 4, y = rho^2 + P0.
struct QuarticForm {
    Scalar A;
    Scalar G;
    Scalar B;
    Scalar E;
    Scalar Cq;
    Scalar P0;
};

// y_t^2 = sum_j poly[j] y^j + G (y - P0)^(5/2) + E (y - P0)^(3/2)
struct QuarticReport {
    bool identically_zero = false;
    bool polynomial = false; // G = E = 0: the relation fits the m = 2 layout
    std::vector<Scalar> poly; // coefficients of y^0 .. y^3
    Scalar half_power_G; // remainder coefficient of (y - P0)^(5/2)
    Scalar half_power_E; // remainder coefficient of (y - P0)^(3/2)
    Scalar P0;
    std::optional<SubequationAnsatz> ansatz;
};

QuarticReport transform_quartic(const QuarticForm &q);

// Coefficients of p(y + s) given those of p(y).
std::vector<Scalar> shift_polynomial(const std::vector<Scalar> &p, const Scalar &s);

struct ResiduePair {
    std::size_t first = 0;
    std::optional<std::size_t> second; // nullopt: self-paired or unpaired
    bool self_paired = false;
    Scalar residue;
};

// Pairs branches whose t^-1 coefficients of y are negatives of each other
// within tol; zero-residue branches pair with themselves.
std::vector<ResiduePair> residue_pairing(const std::vector<std::pair<BranchSpec, PuiseuxSeries>> &branches,
                                         double tol = 1e-25);

} // namespace painleve

#endif
