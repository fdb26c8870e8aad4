#ifndef PAINLEVE_INTEGRATOR_HPP
#define PAINLEVE_INTEGRATOR_HPP

#include <cstddef>

#include <painleve/odemodel.hpp>

namespace painleve
{

struct IntegratorOptions {
    unsigned order = 40; // Taylor order per step; at least 8
    std::size_t max_steps = 100000;
};

struct IntegrationResult {
    PhaseState state;
    std::size_t steps = 0;
    BigFloat energy_drift; // |H(end) - H(start)|
};

// Adaptive Taylor-series integration of the system along the real segment
// from s0.t to t_end, at the working precision of the inputs. The step is
// chosen so the last two retained Taylor terms are each below tol.
// Throws SingularityApproach if the step collapses.
IntegrationResult integrate_numeric(const PolynomialODESystem &sys, const PhaseState &s0, const Scalar &t_end,
                                    const Scalar &tol, const IntegratorOptions &options = {});

} // namespace painleve

#endif
