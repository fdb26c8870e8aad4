#ifndef PAINLEVE_JSON_IO_HPP
#define PAINLEVE_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <painleve/convergence.hpp>
#include <painleve/integrator.hpp>
#include <painleve/laurent_series.hpp>
#include <painleve/painleve_test.hpp>
#include <painleve/subequation.hpp>

namespace painleve
{

using json = nlohmann::json;

// Exact: {"num": "p", "den": "q"}; rounded: {"re": "...", "im": "...", "bits": n}.
json to_json(const Scalar &s);
Scalar scalar_from_json(const json &j);

json to_json(const DominantBalance &b);
json to_json(const ResonanceSet &r);
json to_json(const ClassificationVerdict &v);
json to_json(const CandidateC &c);

json to_json(const BranchSpec &s);
BranchSpec branch_from_json(const json &j);
json to_json(const RecurrenceStep &s);

// {"step": "1|1/2", "lead": Scalar, "coeffs": [...], "center": Scalar}
json series_to_json(const PuiseuxSeries &s);
PuiseuxSeries series_from_json(const json &j);
// x and y series with case, branch, N and H attached to each.
json to_json(const SeriesBuild &b);

json to_json(const ConvergenceCertificate &c);
json to_json(const TailCheck &t);

json to_json(const SubequationAnsatz &a);
json to_json(const FitResult &f);
json to_json(const QuarticForm &q);
json to_json(const QuarticReport &r);
json to_json(const PhaseState &s);

json to_json(const BigFloat &v);

} // namespace painleve

#endif
