#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "vand/quadreal.hpp"

namespace vand {

template <class R>
struct EigResult {
  std::vector<R> values;         // ascending
  std::vector<Cplx<R>> vectors;  // column k (vectors[j + k*M]) pairs with values[k]
  int sweeps = 0;
};

// Cyclic Jacobi for a Hermitian matrix, templated over the real type so the
// same code serves double and qreal. Row-major input of size M*M; only the
// Hermitian part is trusted (the upper triangle drives the rotations).
template <class R>
EigResult<R> hermitian_eigen(std::vector<Cplx<R>> A, long M, bool want_vectors) {
  if (M < 1 || (long)A.size() != M * M)
    throw std::invalid_argument("hermitian_eigen: bad dimensions");

  EigResult<R> out;
  out.values.assign(M, R(0));
  if (want_vectors) {
    out.vectors.assign(M * M, Cplx<R>{});
    for (long j = 0; j < M; ++j) out.vectors[j + j * M] = Cplx<R>(R(1));
  }
  auto V = out.vectors.data();

  R fro2(0);
  for (long i = 0; i < M * M; ++i) fro2 += r_norm(A[i]);
  const R fro = r_sqrt(fro2);
  if (!(fro > R(0))) return out;  // zero matrix

  const R tol = R(16) * r_eps<R>() * fro;
  const int max_sweeps = 64;

  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    out.sweeps = sweep;
    R off2(0);
    for (long p = 0; p < M; ++p)
      for (long q = p + 1; q < M; ++q) off2 += r_norm(A[p + q * M]);
    if (r_sqrt(R(2) * off2) <= tol) {
      for (long j = 0; j < M; ++j) out.values[j] = A[j + j * M].re;
      std::vector<long> order(M);
      std::iota(order.begin(), order.end(), 0L);
      std::sort(order.begin(), order.end(),
                [&](long x, long y) { return out.values[x] < out.values[y]; });
      std::vector<R> vals(M);
      for (long k = 0; k < M; ++k) vals[k] = out.values[order[k]];
      out.values = std::move(vals);
      if (want_vectors) {
        std::vector<Cplx<R>> W(M * M);
        for (long k = 0; k < M; ++k)
          for (long j = 0; j < M; ++j) W[j + k * M] = V[j + order[k] * M];
        out.vectors = std::move(W);
      }
      return out;
    }

    for (long p = 0; p < M; ++p)
      for (long q = p + 1; q < M; ++q) {
        Cplx<R> f = A[p + q * M];
        R r = r_abs(f);
        if (!(r > R(0))) continue;
        // unitary 2x2: zero the (p,q) entry of the Hermitian block
        Cplx<R> phase{f.re / r, f.im / r};  // e^{i phi}
        R a = A[p + p * M].re;
        R b = A[q + q * M].re;
        R kappa = (a - b) / (R(2) * r);
        R t;
        if (kappa == R(0))
          t = R(1);
        else {
          R at = r_fabs(kappa) + r_sqrt(R(1) + kappa * kappa);
          t = (kappa > R(0) ? R(1) : R(-1)) / at;
        }
        R c = R(1) / r_sqrt(R(1) + t * t);
        R s = t * c;

        Cplx<R> sph = s * phase;            // s e^{i phi}
        Cplx<R> sphc = r_conj(sph);         // s e^{-i phi}

        // columns: col_p' = c col_p + s e^{-i phi} col_q,
        //          col_q' = -s e^{i phi} col_p + c col_q
        for (long i = 0; i < M; ++i) {
          Cplx<R> ap = A[i + p * M], aq = A[i + q * M];
          A[i + p * M] = c * ap + sphc * aq;
          A[i + q * M] = Cplx<R>(R(0)) - sph * ap + c * aq;
        }
        // rows: row_p' = c row_p + s e^{i phi} row_q,
        //       row_q' = -s e^{-i phi} row_p + c row_q
        for (long i = 0; i < M; ++i) {
          Cplx<R> ap = A[p + i * M], aq = A[q + i * M];
          A[p + i * M] = c * ap + sph * aq;
          A[q + i * M] = Cplx<R>(R(0)) - sphc * ap + c * aq;
        }
        // exact values on the pivot block keep the matrix Hermitian
        A[p + p * M] = Cplx<R>(c * c * a + s * s * b + R(2) * s * c * r);
        A[q + q * M] = Cplx<R>(s * s * a + c * c * b - R(2) * s * c * r);
        A[p + q * M] = Cplx<R>(R(0));
        A[q + p * M] = Cplx<R>(R(0));

        if (want_vectors)
          for (long i = 0; i < M; ++i) {
            Cplx<R> vp = V[i + p * M], vq = V[i + q * M];
            V[i + p * M] = c * vp + sphc * vq;
            V[i + q * M] = Cplx<R>(R(0)) - sph * vp + c * vq;
          }
      }
  }

  char msg[128];
  std::snprintf(msg, sizeof msg,
                "hermitian_eigen: no convergence after %d sweeps (M=%ld)",
                max_sweeps, M);
  throw std::runtime_error(msg);
}

}  // namespace vand
