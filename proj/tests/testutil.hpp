#pragma once

// Shared helpers for the test binaries: random clustered configurations with
// controllable geometry, used by the property suites and the acceptance run.

#include <algorithm>
#include <cmath>
#include <vector>

#include "vand/geometry.hpp"
#include "vand/rng.hpp"
#include "vand/types.hpp"

namespace vandtest {

struct ClusteredParams {
  int d = 1;
  long n = 255;        // degree; N = n+1
  long L = 3;          // cluster count
  long lambda_max = 3; // cluster sizes drawn from 1..lambda_max
  double tau = 0.3;    // target in-cluster separation scale (times 1/N)
  double min_anchor_gap = 4.0;  // anchor separation in units of 1/N
};

// Anchors separated by at least min_anchor_gap/N, each carrying a cluster of
// 1..lambda_max nodes inside a cube of side <= 0.95/N with pairwise gaps of
// at least tau/(lambda*N).  Produces valid clustered configurations by
// construction (rho > 1 when min_anchor_gap - 2 > 1).
inline vand::NodeSet random_clustered(vand::SplitMix64& rng, const ClusteredParams& p) {
  const int d = p.d;
  const double N = (double)(p.n + 1);
  std::vector<std::vector<double>> anchors;
  int guard = 0;
  while ((long)anchors.size() < p.L) {
    if (++guard > 20000) throw std::runtime_error("random_clustered: anchor sampling stalled");
    std::vector<double> a(d);
    for (int l = 0; l < d; ++l) a[l] = rng.uniform();
    bool ok = true;
    for (const auto& b : anchors)
      if (vand::wrap_distance(a.data(), b.data(), d) < p.min_anchor_gap / N) ok = false;
    if (ok) anchors.push_back(a);
  }

  std::vector<double> coords;
  for (const auto& a : anchors) {
    long sz = 1 + (long)rng.below((std::uint64_t)p.lambda_max);
    std::vector<std::vector<double>> offs;
    int tries = 0;
    while ((long)offs.size() < sz) {
      if (++tries > 40000) { sz = (long)offs.size() ? (long)offs.size() : 1; break; }
      std::vector<double> o(d);
      for (int l = 0; l < d; ++l) o[l] = rng.uniform() * 0.95 / N;
      bool ok = true;
      for (const auto& q : offs) {
        double dist = 0;
        for (int l = 0; l < d; ++l) dist = std::max(dist, std::fabs(o[l] - q[l]));
        if (dist < p.tau / ((double)p.lambda_max * N)) ok = false;
      }
      if (ok) offs.push_back(o);
    }
    if (offs.empty()) offs.push_back(std::vector<double>(d, 0.0));
    for (const auto& o : offs)
      for (int l = 0; l < d; ++l) coords.push_back(a[l] + o[l]);
  }
  return vand::make_node_set(d, p.n, coords);
}

// An isolated equispaced cluster: lambda nodes spaced tau/N apart along the
// first coordinate, plus optional far-away singletons.
inline vand::NodeSet equispaced_cluster(int d, long n, long lambda, double tau,
                                        long extra_singletons = 0) {
  const double N = (double)(n + 1);
  std::vector<double> coords;
  for (long i = 0; i < lambda; ++i) {
    coords.push_back((double)i * tau / N);
    for (int l = 1; l < d; ++l) coords.push_back(0.0);
  }
  for (long s = 0; s < extra_singletons; ++s) {
    coords.push_back(0.5 + (double)s * 8.0 / N);
    for (int l = 1; l < d; ++l) coords.push_back(0.5);
  }
  return vand::make_node_set(d, n, coords);
}

}  // namespace vandtest
