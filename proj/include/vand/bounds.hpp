#pragma once

#include <string>
#include <vector>

#include "vand/geometry.hpp"
#include "vand/types.hpp"

namespace vand {

// Riemann zeta for s > 1: partial sum plus the midpoint of the integral tail
// bracket, accurate to better than 1e-12 absolute for s >= 2. Memoized.
double zeta(double s);

struct BoundCondition {
  std::string description;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

// One evaluated closed-form bound with its full precondition checklist.
// Conditions are always evaluated, never assumed: `value` is meaningful as a
// bound on sigma_min only when `applicable` is true.
struct BoundReport {
  std::string name;     // theorem41, corollary42, best_beta, weakest_condition,
                        // pair_cluster, well_separated, lili17, kuna18, di19,
                        // upper_equispaced, upper_pair
  std::string variant;  // distinguishes families: beta2, betalog, beta2lambda,
                        // table, general, interlacing, closed-form
  std::vector<BoundCondition> conditions;
  double value = 0.0;
  bool lower = true;        // direction: lower or upper bound on sigma_min
  bool applicable = false;  // all conditions pass
  // The pair-cluster comparison bound of KuNa18 additionally assumes equal
  // in-cluster separations; carried as a flag, not validated.
  bool caveat_equal_separation = false;
};

// Main lower bound: sigma_min >= N^{d/2} / (1.5 beta^{d/4} lambda^{lambda+d/2-1/2} C)
// under beta >= d+1 even, N > 2 beta^2 lambda, and the rho condition.
BoundReport theorem41(const GeometrySummary& gs, int beta);

// d=1, beta=2 specialization with the worst-case complexity substituted:
// sigma_min >= sqrt(N) tau^{lambda-1} / (1.8 (2e)^{lambda-1}).
BoundReport corollary42(const GeometrySummary& gs);

// The two preset beta choices: the "best estimate" (beta = d+1 or d+2, made
// even) and the "weakest condition" (beta logarithmic in the complexity).
std::vector<BoundReport> preset_beta_bounds(const GeometrySummary& gs);

// beta = 2 ceil(log(2^d (2^d-1) lambda^lambda zeta(2) C) / 2); always an even
// integer >= 2.
int weakest_condition_beta(int d, long lambda, double log_complexity);

// lambda = 1 specialization: rho >= 6d gives sigma_min >= N^{d/2}/(3 d^{d/4}).
BoundReport well_separated(const GeometrySummary& gs);

// lambda = 2 specialization: rho >= 12d(4/tau)^{1/(d+1)} gives
// sigma_min >= tau N^{d/2} / (12 2^{(d-1)/2} d^{d/4}).
BoundReport pair_cluster(const GeometrySummary& gs);

// Sharpened Lagrange-factor constant: (1 - pi^2/(3 lambda^2))^{-1/2} times
// (N/lambda)/floor(n/lambda), which tends to 1 as n grows; 1 for lambda = 1.
double lili_c0(long lambda, long n);

// d=1 comparison set: the three theorem41 variants (beta = 2, logarithmic
// beta, beta = 2 lambda) and the external baselines as transcribed.
std::vector<BoundReport> comparison_bounds(const GeometrySummary& gs);

// Upper bound on min over configurations holding an equispaced lambda-cluster
// with separation tau (d = 1).
BoundReport upper_bound_equispaced(long lambda, double tau, long N);

// Upper bounds witnessed by the closest pair of the given configuration:
// exact Cauchy interlacing through the 2x2 Gram block, and the closed form
// sigma_min <= pi tau sqrt(d) N^{d/2} / sqrt(6).
std::vector<BoundReport> upper_bound_pair(const NodeSet& ns);

// Intermediate estimates from the main theorem's proof, for comparison
// against the certificate module's exactly computed quantities.
struct ProofEstimates {
  double eps_bound = 0.0;     // upper bound on ||eps||_2
  double f_norm_bound = 0.0;  // upper bound on ||f||_{L2}, needs the rho condition
};
ProofEstimates certificate_proof_estimates(const GeometrySummary& gs, int beta);

// Every lower bound relevant for a configuration, for analyze/experiment
// output. Upper bounds need a witnessing node set and are appended by callers.
std::vector<BoundReport> lower_bound_reports(const GeometrySummary& gs);

std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);
std::string bound_explain(const BoundReport& r);

}  // namespace vand
