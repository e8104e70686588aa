#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vand/types.hpp"

namespace vand {

// G = A A* assembled from the closed-form Dirichlet entries
// G_{jk} = N^d prod_l d_n((t_j - t_k)_l); Hermitian by construction,
// diagonal exactly N^d.
struct GramMatrix {
  long M = 0;
  double scale = 1.0;  // N^d
  std::vector<cdouble> entries;  // column-major M x M
  cdouble at(long j, long k) const { return entries[j + k * M]; }
};

GramMatrix gram_matrix(const NodeSet& ns);         // OpenMP over entry pairs
GramMatrix gram_matrix_serial(const NodeSet& ns);  // reference implementation

struct SigmaResult {
  double sigma_min = 0.0;
  std::string method;
  double residual = 0.0;  // ||G x - lambda x||_2 / ||G||_F at the minimal pair
  bool clipped = false;   // negative lambda_min from roundoff, rounded to 0
  bool rank_warning = false;  // M > N^d: a zero singular value is expected
};

// sigma_min = sqrt(max(0, lambda_min(G))) through a Jacobi eigensolver.
// Matrices up to 256 nodes run in 128-bit floats: experiment regimes push
// lambda_min / ||G|| far below double's epsilon, where a double eigensolve
// returns pure noise.
SigmaResult smallest_singular_value(const NodeSet& ns);

struct SigmaPair {
  SigmaResult result;
  std::vector<cdouble> min_vector;  // unit eigenvector of G for lambda_min
};
SigmaPair smallest_singular_pair(const NodeSet& ns);

// Definition-level oracle: materializes the M x N^d matrix columnwise with
// std::polar and runs a one-sided Jacobi SVD. No Dirichlet machinery is
// involved, so it cross-checks the Gram route end to end. Guarded to
// N^d <= 1e5.
SigmaResult explicit_vandermonde_smin(const NodeSet& ns);

// M = 2 closed form: sigma_min^2 = N^d (1 - |prod_l d_n(Delta_l)|).
double pair_sigma_closed_form(const NodeSet& ns);

// Three nodes in d = 2: t1 = 0, t2 = (nu/N) a, t3 = (nu/N) b with unit
// vectors a, b forming a non-acute angle. The antipodal case a.b = -1 is the
// configuration whose smallest singular value degrades quadratically in nu.
struct TripleClusterConfig {
  long N = 100;
  double nu = 1e-3;
  double a[2] = {1.0, 0.0};
  double b[2] = {-1.0, 0.0};

  NodeSet nodes() const;
  void validate() const;  // throws std::invalid_argument on a bad config
  bool antipodal() const;
};

struct TripleResult {
  double sigma_min = 0.0;    // eigensolver on the 3-node Gram
  double via_formula = 0.0;  // determinant/adjugate closed form
  bool antipodal = false;
  bool degenerate = false;  // |det| of the 3x3 correlation matrix < 1e-300
};

TripleResult triple_cluster_sigma(const TripleClusterConfig& cfg);

// Least-squares slope of log(sigma) against log(nu); inputs must be positive.
double loglog_slope(const std::vector<std::pair<double, double>>& samples);

}  // namespace vand
