#pragma once

#include <string>
#include <vector>

#include "vand/types.hpp"

namespace vand {

// Absolute slack for "distance <= 1/N" comparisons, so configurations meant
// to sit exactly on the threshold are not split by representation error.
inline constexpr double kDistSlack = 1e-12;

// Distance of a scalar to the nearest integer, in [0, 1/2].
double coord_wrap(double x);

// Wrap-around sup-norm distance on the d-torus: the minimum over integer
// shifts r of ||s - t + r||_inf, always in [0, 1/2].
double wrap_distance(const double* s, const double* t, int d);
double wrap_distance(const NodeSet& ns, long j, long k);

struct ClusterDecomposition {
  // Connected components of the "distance <= 1/N" graph, each sorted by node
  // index; components ordered by nonincreasing size, ties by smallest member.
  std::vector<std::vector<long>> clusters;
  std::vector<long> cluster_of;  // node index -> cluster index
  long lambda = 0;               // largest cluster size
  bool valid = false;            // every component fits in a 1/N cube
  std::string message;           // first violation found, empty when valid
};

struct GeometrySummary {
  int d = 1;
  long n = 0, N = 0, M = 0, L = 0, lambda = 0;
  // Scaled separations.  rho = N * min inter-cluster distance (+inf if L=1),
  // tau = N * min pairwise distance (+inf if M=1).
  double rho = 0, tau = 0;
  // Cluster complexity: max over nodes of prod 1/(N*dist) over the other
  // nodes within distance 1/N.  log_complexity carries the value when the
  // product overflows double range.
  double complexity = 1;
  double log_complexity = 0;
  long center = 0;  // node attaining the complexity maximum
  // Largest over clusters of the in-cluster nearest-neighbour separation
  // (scaled by N); +inf when every cluster is a singleton.  Together with tau
  // this tells whether all in-cluster gaps are equal.
  double tau_cluster_max = 0;
  // shell_counts[m] = number of nodes t' with m*rho <= N*dist(t', center)
  // < (m+1)*rho, for m = 0..floor(N/(2 rho)).  {M} when rho is infinite.
  std::vector<long> shell_counts;
  bool valid = false;   // cd.valid, rho > 1, and no coincident nodes
  std::string message;
};

ClusterDecomposition decompose_clusters(const NodeSet& ns);
GeometrySummary geometry_summary(const NodeSet& ns, const ClusterDecomposition& cd);

struct ShellCheckRow {
  long m = 0;
  long count = 0;
  double bound = 0;  // 2^d (2^d - 1) m^{d-1} lambda, shells m >= 1 only
  bool pass = true;
};

// Packing check for the shells around the given center node.  Row 0 (the
// inner shell) carries no bound and always passes.
std::vector<ShellCheckRow> shell_packing_check(const NodeSet& ns,
                                               const GeometrySummary& gs,
                                               long center_index);

// Worst-case complexity over all configurations with largest cluster lambda
// and scaled separation tau: tau^{1-lambda} / (floor((l-1)/2)! ceil((l-1)/2)!).
double max_complexity(long lambda, double tau);

std::string geometry_csv_header();
std::string geometry_csv_row(const GeometrySummary& gs);

}  // namespace vand
