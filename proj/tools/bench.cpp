// Timing comparison of the serial reference implementations against the
// OpenMP paths: Gram assembly and the certificate basis Gram.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "vand/certificate.hpp"
#include "vand/geometry.hpp"
#include "vand/rng.hpp"
#include "vand/spectra.hpp"
#include "vand/types.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

vand::NodeSet pair_grid(int d, long n, long pairs_per_axis, double tau) {
  const double N = (double)(n + 1);
  std::vector<double> coords;
  if (d == 1) {
    for (long l = 0; l < pairs_per_axis; ++l) {
      const double anchor = (double)l / (double)pairs_per_axis;
      coords.push_back(anchor);
      coords.push_back(anchor + tau / N);
    }
  } else {
    for (long i = 0; i < pairs_per_axis; ++i)
      for (long j = 0; j < pairs_per_axis; ++j) {
        const double ax = (double)i / (double)pairs_per_axis;
        const double ay = (double)j / (double)pairs_per_axis;
        coords.insert(coords.end(), {ax, ay, ax + tau / N, ay + tau / N});
      }
  }
  return vand::make_node_set(d, n, coords);
}

void bench_gram(const vand::NodeSet& ns, int reps) {
  auto t0 = clock_type::now();
  vand::GramMatrix gs;
  for (int r = 0; r < reps; ++r) gs = vand::gram_matrix_serial(ns);
  const double serial_ms = ms_since(t0) / reps;

  t0 = clock_type::now();
  vand::GramMatrix gp;
  for (int r = 0; r < reps; ++r) gp = vand::gram_matrix(ns);
  const double parallel_ms = ms_since(t0) / reps;

  double max_diff = 0.0;
  for (std::size_t i = 0; i < gs.entries.size(); ++i)
    max_diff = std::max(max_diff, std::abs(gs.entries[i] - gp.entries[i]));

  std::printf("gram,%d,%ld,%ld,%.3f,%.3f,%.2f,%.3g\n", ns.d, ns.n, ns.size(), serial_ms,
              parallel_ms, serial_ms / parallel_ms, max_diff);
}

void bench_basis_gram(const vand::NodeSet& ns, int beta, int reps) {
  vand::ClusterDecomposition cd = vand::decompose_clusters(ns);
  vand::CertificateSpec spec = vand::make_certificate_spec(ns, cd, beta);
  std::vector<vand::ProductPoly> basis = vand::build_basis(ns, cd, spec);

  auto t0 = clock_type::now();
  std::vector<vand::cdouble> bs;
  for (int r = 0; r < reps; ++r) bs = vand::basis_inner_gram(basis, false);
  const double serial_ms = ms_since(t0) / reps;

  t0 = clock_type::now();
  std::vector<vand::cdouble> bp;
  for (int r = 0; r < reps; ++r) bp = vand::basis_inner_gram(basis, true);
  const double parallel_ms = ms_since(t0) / reps;

  double max_diff = 0.0;
  for (std::size_t i = 0; i < bs.size(); ++i)
    max_diff = std::max(max_diff, std::abs(bs[i] - bp[i]));

  std::printf("basis_gram,%d,%ld,%ld,%.3f,%.3f,%.2f,%.3g\n", ns.d, ns.n, ns.size(),
              serial_ms, parallel_ms, serial_ms / parallel_ms, max_diff);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("# openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("# compiled without openmp\n");
#endif
  std::printf("kernel,d,n,M,serial_ms,parallel_ms,speedup,max_abs_diff\n");

  bench_gram(pair_grid(1, 4095, 24, 0.3), 5);
  bench_gram(pair_grid(1, 16383, 64, 0.3), 3);
  bench_gram(pair_grid(2, 511, 6, 0.3), 3);
  bench_gram(pair_grid(2, 999, 8, 0.3), 2);

  bench_basis_gram(pair_grid(1, 4095, 24, 0.3), 2, 3);
  bench_basis_gram(pair_grid(2, 511, 5, 0.3), 4, 2);
  return 0;
}
