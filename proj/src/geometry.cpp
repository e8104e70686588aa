#include "vand/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vand {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NodeSet make_node_set(int d, long n, std::vector<double> coords) {
  if (d < 1) throw std::invalid_argument("make_node_set: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("make_node_set: degree must be >= 1");
  if (coords.empty() || coords.size() % (std::size_t)d != 0)
    throw std::invalid_argument("make_node_set: coordinate count must be a positive multiple of d");
  for (double& x : coords) {
    if (!std::isfinite(x)) throw std::invalid_argument("make_node_set: non-finite coordinate");
    x -= std::floor(x);
    if (x >= 1.0) x = 0.0;  // x-floor(x) can round up to 1 for tiny negatives
  }
  NodeSet ns;
  ns.d = d;
  ns.n = n;
  ns.coords = std::move(coords);
  return ns;
}

double coord_wrap(double x) { return std::fabs(x - std::nearbyint(x)); }

double wrap_distance(const double* s, const double* t, int d) {
  double m = 0;
  for (int l = 0; l < d; ++l) m = std::max(m, coord_wrap(s[l] - t[l]));
  return m;
}

double wrap_distance(const NodeSet& ns, long j, long k) {
  return wrap_distance(ns.node(j), ns.node(k), ns.d);
}

ClusterDecomposition decompose_clusters(const NodeSet& ns) {
  const long M = ns.size();
  const double thr = 1.0 / (double)ns.N() + kDistSlack;

  // Union-find over the "close" relation.
  std::vector<long> parent(M);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (long j = 0; j < M; ++j)
    for (long k = j + 1; k < M; ++k)
      if (wrap_distance(ns, j, k) <= thr) {
        long a = find(j), b = find(k);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<std::vector<long>> groups(M);
  for (long j = 0; j < M; ++j) groups[find(j)].push_back(j);
  ClusterDecomposition cd;
  for (auto& g : groups)
    if (!g.empty()) cd.clusters.push_back(std::move(g));
  std::sort(cd.clusters.begin(), cd.clusters.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });

  cd.cluster_of.assign(M, -1);
  for (long c = 0; c < (long)cd.clusters.size(); ++c)
    for (long j : cd.clusters[c]) cd.cluster_of[j] = c;
  cd.lambda = 0;
  for (const auto& cl : cd.clusters) cd.lambda = std::max(cd.lambda, (long)cl.size());

  cd.valid = true;
  for (const auto& cl : cd.clusters) {
    double diam = 0;
    for (std::size_t a = 0; a < cl.size(); ++a)
      for (std::size_t b = a + 1; b < cl.size(); ++b)
        diam = std::max(diam, wrap_distance(ns, cl[a], cl[b]));
    if (diam > thr) {
      cd.valid = false;
      char buf[128];
      std::snprintf(buf, sizeof buf, "cluster diameter exceeds 1/N (%.6g > %.6g)", diam,
                    1.0 / (double)ns.N());
      cd.message = buf;
      break;
    }
  }
  return cd;
}

GeometrySummary geometry_summary(const NodeSet& ns, const ClusterDecomposition& cd) {
  GeometrySummary gs;
  gs.d = ns.d;
  gs.n = ns.n;
  gs.N = ns.N();
  gs.M = ns.size();
  gs.L = (long)cd.clusters.size();
  gs.lambda = cd.lambda;

  const long M = gs.M;
  const double N = (double)gs.N;
  const double thr = 1.0 / N + kDistSlack;

  double min_all = kInf, min_inter = kInf;
  std::vector<double> logc(M, 0.0);  // per-node complexity, log scale
  bool coincident = false;
  std::vector<double> cluster_nn((std::size_t)gs.L, kInf);  // per-cluster nearest pair
  for (long j = 0; j < M; ++j)
    for (long k = j + 1; k < M; ++k) {
      double dist = wrap_distance(ns, j, k);
      min_all = std::min(min_all, dist);
      if (cd.cluster_of[j] != cd.cluster_of[k])
        min_inter = std::min(min_inter, dist);
      else
        cluster_nn[cd.cluster_of[j]] = std::min(cluster_nn[cd.cluster_of[j]], dist);
      if (dist <= thr) {
        if (dist == 0) {
          coincident = true;
          logc[j] = logc[k] = kInf;
        } else {
          // Factors are >= 1 by definition; the comparison slack may admit a
          // distance a hair above 1/N, so clamp.
          double term = std::max(0.0, -std::log(N * dist));
          logc[j] += term;
          logc[k] += term;
        }
      }
    }

  gs.tau = (M >= 2) ? N * min_all : kInf;
  gs.rho = (gs.L >= 2) ? N * min_inter : kInf;
  gs.tau_cluster_max = 0;
  for (double v : cluster_nn)
    gs.tau_cluster_max = std::max(gs.tau_cluster_max, std::isinf(v) ? v : N * v);
  if (gs.L == 0) gs.tau_cluster_max = kInf;

  gs.center = 0;
  for (long j = 1; j < M; ++j)
    if (logc[j] > logc[gs.center]) gs.center = j;
  gs.log_complexity = logc[gs.center];
  gs.complexity = std::exp(gs.log_complexity);

  // Shells around the complexity center, width rho/N.
  if (std::isinf(gs.rho)) {
    gs.shell_counts = {M};
  } else if (gs.rho > 0) {
    long mmax = (long)std::floor(N / (2.0 * gs.rho));
    gs.shell_counts.assign((std::size_t)mmax + 1, 0);
    for (long j = 0; j < M; ++j) {
      double w = N * wrap_distance(ns, j, gs.center);
      long m = (long)std::floor(w / gs.rho);
      if (m > mmax) m = mmax;  // w == N/2 on the closing boundary
      ++gs.shell_counts[(std::size_t)m];
    }
  }

  gs.valid = true;
  if (!cd.valid) {
    gs.valid = false;
    gs.message = cd.message;
  } else if (coincident) {
    gs.valid = false;
    gs.message = "coincident nodes (tau = 0)";
  } else if (gs.L >= 2 && !(gs.rho > 1.0)) {
    gs.valid = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "cluster separation rho = %.6g is not > 1", gs.rho);
    gs.message = buf;
  }
  return gs;
}

std::vector<ShellCheckRow> shell_packing_check(const NodeSet& ns, const GeometrySummary& gs,
                                               long center_index) {
  std::vector<ShellCheckRow> rows;
  if (std::isinf(gs.rho) || gs.rho <= 0) return rows;  // no finite shells to check
  const double N = (double)gs.N;
  long mmax = (long)std::floor(N / (2.0 * gs.rho));
  std::vector<long> counts((std::size_t)mmax + 1, 0);
  for (long j = 0; j < gs.M; ++j) {
    double w = N * wrap_distance(ns, j, center_index);
    long m = (long)std::floor(w / gs.rho);
    if (m > mmax) m = mmax;
    ++counts[(std::size_t)m];
  }
  double cube = std::pow(2.0, gs.d);
  for (long m = 0; m <= mmax; ++m) {
    ShellCheckRow row;
    row.m = m;
    row.count = counts[(std::size_t)m];
    if (m >= 1) {
      row.bound = cube * (cube - 1) * std::pow((double)m, gs.d - 1) * (double)gs.lambda;
      row.pass = (double)row.count <= row.bound;
    }
    rows.push_back(row);
  }
  return rows;
}

double max_complexity(long lambda, double tau) {
  if (lambda < 1) throw std::invalid_argument("max_complexity: lambda must be >= 1");
  if (!(tau > 0)) throw std::invalid_argument("max_complexity: tau must be positive");
  if (lambda == 1) return 1.0;
  double lo = (double)((lambda - 1) / 2), hi = (double)(lambda / 2);  // floor/ceil of (lambda-1)/2
  double logv = (1.0 - (double)lambda) * std::log(tau) - std::lgamma(lo + 1) - std::lgamma(hi + 1);
  return std::exp(logv);
}

std::string geometry_csv_header() { return "d,n,N,M,L,lambda,rho,tau,complexity,valid"; }

std::string geometry_csv_row(const GeometrySummary& gs) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%ld,%ld,%ld,%ld,%ld,%.17g,%.17g,%.17g,%d", gs.d, gs.n, gs.N,
                gs.M, gs.L, gs.lambda, gs.rho, gs.tau, gs.complexity, gs.valid ? 1 : 0);
  return buf;
}

}  // namespace vand
