#include "vand/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "vand/hermitian_eig.hpp"
#include "vand/quadreal.hpp"

namespace vand {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Templated modified Dirichlet kernel; the near-zero threshold scales with
// the precision in use.
template <class R>
Cplx<R> dirichlet_r(long m, R x) {
  x = x - (R)std::nearbyint(r_to_double(x));
  if (x == R(0)) return Cplx<R>(R(1));
  R s = r_sin(r_pi<R>() * x);
  R thr = std::is_same_v<R, double> ? R(1e-14) : R(1e-30);
  if (r_fabs(s) < thr) {
    Cplx<R> acc(R(0));
    for (long k = 0; k <= m; ++k) {
      R ang = R(2) * r_pi<R>() * (R)k * x;
      acc += Cplx<R>(r_cos(ang), r_sin(ang));
    }
    return (R(1) / (R)(m + 1)) * acc;
  }
  R mag = r_sin(r_pi<R>() * (R)(m + 1) * x) / ((R)(m + 1) * s);
  R ang = r_pi<R>() * (R)m * x;
  return Cplx<R>(mag * r_cos(ang), mag * r_sin(ang));
}

template <class R>
std::vector<Cplx<R>> assemble_gram(const NodeSet& ns, bool parallel) {
  const long M = ns.size();
  R scale(1);
  for (int l = 0; l < ns.d; ++l) scale = scale * (R)(ns.n + 1);
  std::vector<Cplx<R>> G(M * M);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long j = 0; j < M; ++j) {
    G[j + j * M] = Cplx<R>(scale);
    for (long k = j + 1; k < M; ++k) {
      Cplx<R> prod(R(1));
      // promote before subtracting: rounding each difference to double
      // perturbs entries independently, which breaks positive
      // semidefiniteness near 1e-14 and buries near-zero eigenvalues
      for (int l = 0; l < ns.d; ++l)
        prod = prod * dirichlet_r<R>(ns.n, (R)ns.node(j)[l] - (R)ns.node(k)[l]);
      // column-major: entry (row j, col k) = N^d prod_l d_n((t_j - t_k)_l)
      G[j + k * M] = scale * prod;
      G[k + j * M] = r_conj(G[j + k * M]);
    }
  }
  return G;
}

template <class R>
struct GramSolve {
  R lambda_min;
  std::vector<Cplx<R>> min_vector;
  double residual;
  bool clipped;
};

template <class R>
GramSolve<R> solve_gram(const std::vector<Cplx<R>>& G, long M) {
  auto eig = hermitian_eigen(G, M, true);

  R fro2(0);
  for (const auto& z : G) fro2 += r_norm(z);
  R fro = r_sqrt(fro2);

  // residual of the minimal eigenpair against the original matrix
  R lam = eig.values[0];
  R res2(0);
  for (long i = 0; i < M; ++i) {
    Cplx<R> acc(R(0));
    for (long j = 0; j < M; ++j) acc += G[i + j * M] * eig.vectors[j];
    acc -= lam * eig.vectors[i];
    res2 += r_norm(acc);
  }
  GramSolve<R> out;
  out.residual = fro > R(0) ? r_to_double(r_sqrt(res2) / fro) : 0.0;
  out.clipped = lam < R(0);
  out.lambda_min = out.clipped ? R(0) : lam;
  out.min_vector.assign(eig.vectors.begin(), eig.vectors.begin() + M);
  return out;
}

SigmaPair gram_eigen_pair(const NodeSet& ns) {
  const long M = ns.size();
  SigmaPair out;
  out.result.method = "gram-eigen";
  out.result.rank_warning = (double)M > ns.Npow();

  if (M <= 256) {
    auto G = assemble_gram<qreal>(ns, true);
    auto sol = solve_gram<qreal>(G, M);
    out.result.sigma_min = r_to_double(r_sqrt(sol.lambda_min));
    out.result.residual = sol.residual;
    out.result.clipped = sol.clipped;
    out.min_vector.resize(M);
    for (long j = 0; j < M; ++j)
      out.min_vector[j] = cdouble(r_to_double(sol.min_vector[j].re),
                                  r_to_double(sol.min_vector[j].im));
  } else {
    auto G = assemble_gram<double>(ns, true);
    auto sol = solve_gram<double>(G, M);
    out.result.sigma_min = std::sqrt(sol.lambda_min);
    out.result.residual = sol.residual;
    out.result.clipped = sol.clipped;
    out.min_vector.resize(M);
    for (long j = 0; j < M; ++j)
      out.min_vector[j] = cdouble(sol.min_vector[j].re, sol.min_vector[j].im);
  }
  if (out.result.residual > 1e-10) {
    char msg[128];
    std::snprintf(msg, sizeof msg,
                  "smallest_singular_value: eigen-residual %.3g exceeds 1e-10",
                  out.result.residual);
    throw std::runtime_error(msg);
  }
  return out;
}

// 1 - sin(pi N x)/(N sin(pi x)) evaluated stably in quad precision; the
// numerator cancellation costs ~2 log10(1/x) digits, affordable with 34.
qreal one_minus_ratio(long N, qreal x) {
  x = x - (qreal)std::nearbyint(r_to_double(x));
  if (x == qreal(0)) return qreal(0);
  qreal sx = sinq(M_PIq * x);
  qreal num = (qreal)N * sx - sinq(M_PIq * (qreal)N * x);
  return num / ((qreal)N * sx);
}

// complements 1 - u for the two-coordinate product u = e1 * e2
qreal pair_complement(long N, qreal dx, qreal dy) {
  qreal p1 = one_minus_ratio(N, dx);
  qreal p2 = one_minus_ratio(N, dy);
  return p1 + p2 - p1 * p2;
}

}  // namespace

GramMatrix gram_matrix(const NodeSet& ns) {
  GramMatrix g;
  g.M = ns.size();
  g.scale = ns.Npow();
  auto G = assemble_gram<double>(ns, true);
  g.entries.resize(G.size());
  for (size_t i = 0; i < G.size(); ++i) g.entries[i] = cdouble(G[i].re, G[i].im);
  return g;
}

GramMatrix gram_matrix_serial(const NodeSet& ns) {
  GramMatrix g;
  g.M = ns.size();
  g.scale = ns.Npow();
  auto G = assemble_gram<double>(ns, false);
  g.entries.resize(G.size());
  for (size_t i = 0; i < G.size(); ++i) g.entries[i] = cdouble(G[i].re, G[i].im);
  return g;
}

SigmaResult smallest_singular_value(const NodeSet& ns) {
  return gram_eigen_pair(ns).result;
}

SigmaPair smallest_singular_pair(const NodeSet& ns) { return gram_eigen_pair(ns); }

SigmaResult explicit_vandermonde_smin(const NodeSet& ns) {
  const long M = ns.size();
  const int d = ns.d;
  const long n = ns.n;
  const double Npow = ns.Npow();
  if (Npow > 1e5 + 0.5)
    throw std::invalid_argument("explicit_vandermonde_smin: N^d exceeds the 1e5 guard");
  const long K = (long)std::llround(Npow);

  // columns are conjugated rows of the explicit matrix: B[i, j] = e^{-2 pi i alpha_i . t_j}
  std::vector<cdouble> B((size_t)K * M);
  std::vector<long> alpha(d, 0);
  for (long i = 0; i < K; ++i) {
    for (long j = 0; j < M; ++j) {
      double dot = 0.0;
      const double* t = ns.node(j);
      for (int l = 0; l < d; ++l) dot += (double)alpha[l] * t[l];
      B[i + (size_t)j * K] = std::polar(1.0, -2.0 * kPi * dot);
    }
    for (int l = 0; l < d; ++l) {
      if (++alpha[l] <= n) break;
      alpha[l] = 0;
    }
  }

  // one-sided Jacobi: rotate column pairs until mutually orthogonal. The
  // orthogonality target scales with sqrt(K) (rounding noise of a K-term dot
  // product), and columns collapsed by rank deficiency are left alone.
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = 8.0 * eps * std::sqrt((double)K);
  const double dead = 256.0 * (double)K * (double)M * eps * eps;
  double worst = 0.0;
  bool converged = false;
  for (int sweep = 1; sweep <= 64 && !converged; ++sweep) {
    converged = true;
    worst = 0.0;
    for (long p = 0; p < M; ++p)
      for (long q = p + 1; q < M; ++q) {
        cdouble* bp = &B[(size_t)p * K];
        cdouble* bq = &B[(size_t)q * K];
        double a = 0.0, b = 0.0;
        cdouble f(0.0, 0.0);
        for (long i = 0; i < K; ++i) {
          a += std::norm(bp[i]);
          b += std::norm(bq[i]);
          f += std::conj(bp[i]) * bq[i];
        }
        double r = std::abs(f);
        if (a <= dead || b <= dead || r == 0.0) continue;
        double ortho = r / std::sqrt(a * b);
        worst = std::max(worst, ortho);
        if (ortho <= tol) continue;
        converged = false;

        cdouble phase = f / r;
        double kappa = (a - b) / (2.0 * r);
        double t = kappa == 0.0
                       ? 1.0
                       : (kappa > 0 ? 1.0 : -1.0) /
                             (std::fabs(kappa) + std::sqrt(1.0 + kappa * kappa));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        cdouble sph = s * phase, sphc = std::conj(sph);
        for (long i = 0; i < K; ++i) {
          cdouble xp = bp[i], xq = bq[i];
          bp[i] = c * xp + sphc * xq;
          bq[i] = -sph * xp + c * xq;
        }
      }
    if (sweep == 64 && !converged)
      throw std::runtime_error("explicit_vandermonde_smin: Jacobi SVD did not converge");
  }

  double min_norm2 = std::numeric_limits<double>::infinity();
  for (long j = 0; j < M; ++j) {
    double s2 = 0.0;
    for (long i = 0; i < K; ++i) s2 += std::norm(B[i + (size_t)j * K]);
    min_norm2 = std::min(min_norm2, s2);
  }

  SigmaResult out;
  out.method = "explicit-svd-oracle";
  out.sigma_min = std::sqrt(min_norm2);
  out.residual = worst;
  out.rank_warning = (double)M > Npow;
  return out;
}

double pair_sigma_closed_form(const NodeSet& ns) {
  if (ns.size() != 2)
    throw std::invalid_argument("pair_sigma_closed_form: exactly two nodes required");
  // sigma^2 = N^d (1 - prod_l |ratio_l|), accumulated in complement form:
  // with c = 1 - prod-so-far and p = 1 - |ratio|, the update is c + p - c p.
  // Forming the product first and complementing in double loses everything
  // once the node gap drops below ~1e-8.
  qreal c(0);
  for (int l = 0; l < ns.d; ++l) {
    qreal e = one_minus_ratio(ns.n + 1, (qreal)ns.node(0)[l] - (qreal)ns.node(1)[l]);
    qreal p = e <= qreal(1) ? e : qreal(2) - e;  // e > 1 means ratio < 0
    c = c + p - c * p;
  }
  return r_to_double(sqrtq((qreal)ns.Npow() * c));
}

NodeSet TripleClusterConfig::nodes() const {
  validate();
  double s = nu / (double)N;
  return make_node_set(2, N - 1,
                       {0.0, 0.0, s * a[0], s * a[1], s * b[0], s * b[1]});
}

void TripleClusterConfig::validate() const {
  if (N < 2) throw std::invalid_argument("TripleClusterConfig: N must be >= 2");
  // nu <= 1/2 is the cluster regime of interest; anything below N/2 is still
  // a well-posed configuration (nodes inside half the torus), and nu >= 1 is
  // the only way to reach the orthogonal-rows case u = v = w = 0.
  if (!(nu > 0.0) || nu >= 0.5 * (double)N)
    throw std::invalid_argument("TripleClusterConfig: nu must lie in (0, N/2)");
  double na = a[0] * a[0] + a[1] * a[1];
  double nb = b[0] * b[0] + b[1] * b[1];
  if (std::fabs(na - 1.0) > 1e-12 || std::fabs(nb - 1.0) > 1e-12)
    throw std::invalid_argument("TripleClusterConfig: a and b must be unit vectors");
  if (a[0] * b[0] + a[1] * b[1] > 1e-12)
    throw std::invalid_argument("TripleClusterConfig: a.b must be <= 0");
}

bool TripleClusterConfig::antipodal() const {
  return std::fabs(a[0] * b[0] + a[1] * b[1] + 1.0) < 1e-12;
}

TripleResult triple_cluster_sigma(const TripleClusterConfig& cfg) {
  cfg.validate();
  TripleResult out;
  out.antipodal = cfg.antipodal();

  const NodeSet ns = cfg.nodes();
  out.sigma_min = smallest_singular_value(ns).sigma_min;

  // closed-form route on the real correlation matrix [[1,u,v],[u,1,w],[v,w,1]]
  // written in the complements p = 1-u, q = 1-v, r = 1-w, which survive the
  // u,v,w -> 1 regime that annihilates the naive expressions:
  //   det = 2(pq+qr+rp) - (p^2+q^2+r^2) - 2pqr
  //   adj = [[r(2-r), p-q-r+qr, q-p-r+pr],
  //          [.,      q(2-q),   r-p-q+pq],
  //          [.,      .,        p(2-p)]]
  // and lambda_min = det / ||adj||_2, so sigma = sqrt(N^d det / ||adj||_2).
  //
  // The complements are evaluated at the stored node coordinates, not the
  // ideal offsets: near the antipodal case lambda_min reacts to coordinate
  // perturbations at relative order (N/nu)^2, so the formula must answer for
  // exactly the nodes the eigensolver saw. Coordinates wrapped into [0,1)
  // are lifted back (z >= 1/2 -> z-1, exact) and differenced in quad.
  const long N = cfg.N;
  double t[3][2];
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 2; ++l) {
      double z = ns.node(j)[l];
      t[j][l] = z >= 0.5 ? z - 1.0 : z;
    }
  qreal p = pair_complement(N, (qreal)t[0][0] - (qreal)t[1][0],
                            (qreal)t[0][1] - (qreal)t[1][1]);
  qreal q = pair_complement(N, (qreal)t[0][0] - (qreal)t[2][0],
                            (qreal)t[0][1] - (qreal)t[2][1]);
  qreal r = pair_complement(N, (qreal)t[1][0] - (qreal)t[2][0],
                            (qreal)t[1][1] - (qreal)t[2][1]);

  qreal det = qreal(2) * (p * q + q * r + r * p) - (p * p + q * q + r * r) -
              qreal(2) * p * q * r;
  out.degenerate = fabsq(det) < (qreal)1e-300;

  std::vector<Cplx<qreal>> adj(9);
  adj[0] = Cplx<qreal>(r * (qreal(2) - r));
  adj[4] = Cplx<qreal>(q * (qreal(2) - q));
  adj[8] = Cplx<qreal>(p * (qreal(2) - p));
  adj[1] = adj[3] = Cplx<qreal>(p - q - r + q * r);
  adj[2] = adj[6] = Cplx<qreal>(q - p - r + p * r);
  adj[5] = adj[7] = Cplx<qreal>(r - p - q + p * q);

  auto eig = hermitian_eigen(adj, 3, false);
  qreal norm_adj = fabsq(eig.values[0]);
  for (qreal v : eig.values) norm_adj = std::max(norm_adj, fabsq(v));

  if (norm_adj == qreal(0) || det < qreal(0)) {
    out.via_formula = 0.0;
    if (det < qreal(0) && !out.degenerate)
      out.degenerate = true;  // PSD violated beyond roundoff: flag it
  } else {
    qreal npow = (qreal)N * (qreal)N;  // d = 2
    out.via_formula = r_to_double(sqrtq(npow * det / norm_adj));
  }
  return out;
}

double loglog_slope(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("loglog_slope: need at least two samples");
  double sx = 0, sy = 0;
  for (auto [x, y] : samples) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("loglog_slope: samples must be positive");
    sx += std::log(x);
    sy += std::log(y);
  }
  double mx = sx / samples.size(), my = sy / samples.size();
  double cov = 0, var = 0;
  for (auto [x, y] : samples) {
    double dx = std::log(x) - mx;
    cov += dx * (std::log(y) - my);
    var += dx * dx;
  }
  if (var == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");
  return cov / var;
}

}  // namespace vand
