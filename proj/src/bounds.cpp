#include "vand/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "vand/spectra.hpp"

namespace vand {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// lambda^e, switching to log-space above lambda = 20 per the overflow policy.
double lam_pow(long lambda, double e) {
  const double l = (double)lambda;
  return lambda <= 20 ? std::pow(l, e) : std::exp(e * std::log(l));
}

BoundCondition cond(std::string desc, double lhs, double rhs, bool pass) {
  return BoundCondition{std::move(desc), lhs, rhs, pass};
}

void finish(BoundReport& r) {
  r.applicable = true;
  for (const auto& c : r.conditions) r.applicable = r.applicable && c.pass;
}

// log(2^d (2^d - 1)), the shell-packing constant of the torus.
double log_shell_const(int d) {
  return (double)d * std::log(2.0) + std::log(std::pow(2.0, d) - 1.0);
}

}  // namespace

double zeta(double s) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta: need s > 1");

  static std::shared_mutex mu;
  static std::map<double, double> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
  }

  // Tail bracket: sum_{k>K} k^{-s} lies between the integrals from K+1 and K,
  // so the midpoint is off by at most half the bracket width.
  long K = 64;
  auto half_width = [s](long k) {
    return 0.5 * (std::pow((double)k, 1.0 - s) - std::pow((double)k + 1.0, 1.0 - s)) / (s - 1.0);
  };
  while (half_width(K) > 5e-13) {
    K *= 2;
    if (K > (1L << 22))
      throw std::invalid_argument("zeta: s too close to 1 for 1e-12 accuracy");
  }
  double sum = 0.0;
  for (long k = K; k >= 1; --k) sum += std::pow((double)k, -s);  // smallest terms first
  const double tail =
      0.5 * (std::pow((double)K, 1.0 - s) + std::pow((double)K + 1.0, 1.0 - s)) / (s - 1.0);
  const double val = sum + tail;

  std::unique_lock lock(mu);
  cache.emplace(s, val);
  return val;
}

BoundReport theorem41(const GeometrySummary& gs, int beta) {
  if (beta < 1) throw std::invalid_argument("theorem41: beta must be >= 1");
  BoundReport r;
  r.name = "theorem41";
  r.lower = true;
  const long lam = gs.lambda;
  const int d = gs.d;
  const double b = (double)beta;

  r.conditions.push_back(cond("beta even", (double)(beta % 2), 0.0, beta % 2 == 0));
  r.conditions.push_back(cond("beta >= d+1", b, (double)(d + 1), beta >= d + 1));
  r.conditions.push_back(
      cond("N > 2 beta^2 lambda", (double)gs.N, 2.0 * b * b * (double)lam,
           (double)gs.N > 2.0 * b * b * (double)lam));

  double rho_rhs = kInf;
  if (beta >= d + 1) {
    const double inner_log = 0.5 * std::log(b) + log_shell_const(d) + xlogx((double)lam) +
                             std::log(zeta(b - d + 1.0)) + gs.log_complexity;
    rho_rhs = (double)lam * b * std::exp(inner_log / b);
  }
  r.conditions.push_back(cond("rho >= lambda beta (sqrt(beta) 2^d (2^d-1) lambda^lambda "
                              "zeta(beta-d+1) C)^(1/beta)",
                              gs.rho, rho_rhs, gs.rho >= rho_rhs));

  const double lam_exp = (double)lam + 0.5 * d - 0.5;
  if (lam <= 20 && std::isfinite(gs.complexity)) {
    const double base =
        std::pow((double)gs.N, 0.5 * d) / (1.5 * std::pow(b, 0.25 * d) * lam_pow(lam, lam_exp));
    r.value = base / gs.complexity;
  } else {
    const double log_base = 0.5 * d * std::log((double)gs.N) - std::log(1.5) -
                            0.25 * d * std::log(b) - lam_exp * std::log((double)lam);
    r.value = std::exp(log_base - gs.log_complexity);
  }
  finish(r);
  return r;
}

BoundReport corollary42(const GeometrySummary& gs) {
  if (gs.d != 1) throw std::invalid_argument("corollary42: univariate only");
  BoundReport r;
  r.name = "corollary42";
  r.lower = true;
  const long lam = gs.lambda;
  const double cmax = max_complexity(lam, gs.tau);

  r.conditions.push_back(cond("N > 8 lambda", (double)gs.N, 8.0 * (double)lam,
                              (double)gs.N > 8.0 * (double)lam));
  const double inner =
      2.0 * std::sqrt(2.0) * lam_pow(lam, (double)lam) * zeta(2.0) * cmax;
  const double rho_rhs = 2.0 * (double)lam * std::sqrt(inner);
  r.conditions.push_back(cond(
      "rho >= 2 lambda (2 sqrt(2) lambda^lambda zeta(2) Cmax)^(1/2) with worst-case Cmax",
      gs.rho, rho_rhs, gs.rho >= rho_rhs));

  if (lam <= 20) {
    r.value = std::sqrt((double)gs.N) * std::pow(gs.tau, (double)lam - 1.0) /
              (1.8 * std::pow(2.0 * M_E, (double)lam - 1.0));
  } else {
    r.value = std::exp(0.5 * std::log((double)gs.N) + ((double)lam - 1.0) * std::log(gs.tau) -
                       std::log(1.8) - ((double)lam - 1.0) * std::log(2.0 * M_E));
  }
  finish(r);
  return r;
}

int weakest_condition_beta(int d, long lambda, double log_complexity) {
  const double inner_log =
      log_shell_const(d) + xlogx((double)lambda) + std::log(zeta(2.0)) + log_complexity;
  long beta = 2L * (long)std::ceil(0.5 * inner_log);
  if (beta < 2) beta = 2;
  return (int)beta;
}

std::vector<BoundReport> preset_beta_bounds(const GeometrySummary& gs) {
  const long lam = gs.lambda;
  const int d = gs.d;
  const double lam_exp = (double)lam + 0.5 * d - 0.5;
  std::vector<BoundReport> out;

  {
    BoundReport r;
    r.name = "best_beta";
    r.lower = true;
    const int beta = (d % 2 == 1) ? d + 1 : d + 2;
    char desc[64];
    std::snprintf(desc, sizeof(desc), "N > 2 beta^2 lambda (beta = %d)", beta);
    r.conditions.push_back(cond(desc, (double)gs.N, 2.0 * beta * beta * (double)lam,
                                (double)gs.N > 2.0 * beta * beta * (double)lam));
    const double rho_rhs =
        6.0 * d * (double)lam * std::exp((xlogx((double)lam) + gs.log_complexity) / (d + 1.0));
    r.conditions.push_back(cond("rho >= 6 d lambda (lambda^lambda C)^(1/(d+1))", gs.rho,
                                rho_rhs, gs.rho >= rho_rhs));
    if (lam <= 20 && std::isfinite(gs.complexity)) {
      r.value = std::pow((double)gs.N, 0.5 * d) /
                (3.0 * std::pow((double)d, 0.25 * d) * lam_pow(lam, lam_exp)) / gs.complexity;
    } else {
      r.value = std::exp(0.5 * d * std::log((double)gs.N) - std::log(3.0) -
                         0.25 * d * std::log((double)d) - lam_exp * std::log((double)lam) -
                         gs.log_complexity);
    }
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "weakest_condition";
    r.lower = true;
    const int beta = weakest_condition_beta(d, lam, gs.log_complexity);
    char desc[64];
    std::snprintf(desc, sizeof(desc), "N > 2 beta^2 lambda (beta = %d)", beta);
    r.conditions.push_back(cond(desc, (double)gs.N, 2.0 * (double)beta * beta * (double)lam,
                                (double)gs.N > 2.0 * (double)beta * beta * (double)lam));
    const double bracket = 2.5 + 1.4 * d + xlogx((double)lam) + gs.log_complexity;
    const double rho_rhs = 3.3 * (double)lam * bracket;
    r.conditions.push_back(cond("rho >= 3.3 lambda (2.5 + 1.4 d + lambda log lambda + log C)",
                                gs.rho, rho_rhs, gs.rho >= rho_rhs));
    if (lam <= 20 && std::isfinite(gs.complexity)) {
      r.value = std::pow((double)gs.N, 0.5 * d) /
                (1.5 * std::pow(bracket, 0.25 * d) * lam_pow(lam, lam_exp)) / gs.complexity;
    } else {
      r.value = std::exp(0.5 * d * std::log((double)gs.N) - std::log(1.5) -
                         0.25 * d * std::log(bracket) - lam_exp * std::log((double)lam) -
                         gs.log_complexity);
    }
    finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

BoundReport well_separated(const GeometrySummary& gs) {
  BoundReport r;
  r.name = "well_separated";
  r.lower = true;
  const int d = gs.d;
  const int beta = (d % 2 == 1) ? d + 1 : d + 2;
  r.conditions.push_back(cond("lambda == 1", (double)gs.lambda, 1.0, gs.lambda == 1));
  r.conditions.push_back(cond("N > 2 beta^2 (beta = d+1 or d+2 even)", (double)gs.N,
                              2.0 * beta * beta, (double)gs.N > 2.0 * beta * beta));
  r.conditions.push_back(cond("rho >= 6 d", gs.rho, 6.0 * d, gs.rho >= 6.0 * d));
  r.value = std::pow((double)gs.N, 0.5 * d) / (3.0 * std::pow((double)d, 0.25 * d));
  finish(r);
  return r;
}

BoundReport pair_cluster(const GeometrySummary& gs) {
  BoundReport r;
  r.name = "pair_cluster";
  r.lower = true;
  const int d = gs.d;
  const int beta = (d % 2 == 1) ? d + 1 : d + 2;
  r.conditions.push_back(cond("lambda == 2", (double)gs.lambda, 2.0, gs.lambda == 2));
  r.conditions.push_back(cond("N > 4 beta^2 (beta = d+1 or d+2 even)", (double)gs.N,
                              4.0 * beta * beta, (double)gs.N > 4.0 * beta * beta));
  const double rho_rhs = 12.0 * d * std::pow(4.0 / gs.tau, 1.0 / (d + 1.0));
  r.conditions.push_back(
      cond("rho >= 12 d (4/tau)^(1/(d+1))", gs.rho, rho_rhs, gs.rho >= rho_rhs));
  r.value = gs.tau * std::pow((double)gs.N, 0.5 * d) /
            (12.0 * std::pow(2.0, 0.5 * (d - 1.0)) * std::pow((double)d, 0.25 * d));
  finish(r);
  return r;
}

double lili_c0(long lambda, long n) {
  if (lambda <= 1) return 1.0;
  const double l = (double)lambda;
  const double front = 1.0 / std::sqrt(1.0 - kPi * kPi / (3.0 * l * l));
  const double ratio = ((double)(n + 1) / l) / (double)(n / lambda);
  return front * ratio;
}

std::vector<BoundReport> comparison_bounds(const GeometrySummary& gs) {
  if (gs.d != 1) throw std::invalid_argument("comparison_bounds: univariate only");
  const long lam = gs.lambda;
  const long M = gs.M;
  const double N = (double)gs.N;
  const double c0 = lili_c0(lam, gs.n);
  std::vector<BoundReport> out;

  {
    BoundReport r = theorem41(gs, 2);
    r.variant = "beta2";
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "theorem41";
    r.variant = "betalog";
    r.lower = true;
    const int beta = weakest_condition_beta(1, lam, gs.log_complexity);
    char desc[64];
    std::snprintf(desc, sizeof(desc), "N > 2 beta^2 lambda (beta = %d)", beta);
    r.conditions.push_back(cond(desc, N, 2.0 * (double)beta * beta * (double)lam,
                                N > 2.0 * (double)beta * beta * (double)lam));
    const double bracket = 3.9 + xlogx((double)lam) + gs.log_complexity;
    r.conditions.push_back(cond("rho >= 3.3 lambda (3.9 + lambda log lambda + log C)", gs.rho,
                                3.3 * (double)lam * bracket, gs.rho >= 3.3 * (double)lam * bracket));
    if (lam <= 20 && std::isfinite(gs.complexity)) {
      r.value = std::sqrt(N) / (1.5 * std::pow(bracket, 0.25) * lam_pow(lam, (double)lam)) /
                gs.complexity;
    } else {
      r.value = std::exp(0.5 * std::log(N) - std::log(1.5) - 0.25 * std::log(bracket) -
                         (double)lam * std::log((double)lam) - gs.log_complexity);
    }
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "theorem41";
    r.variant = "beta2lambda";
    r.lower = true;
    r.conditions.push_back(cond("N > 2 lambda^3", N, 2.0 * std::pow((double)lam, 3.0),
                                N > 2.0 * std::pow((double)lam, 3.0)));
    const double rho_rhs =
        4.4 * lam_pow(lam, 2.5) * std::exp(gs.log_complexity / (2.0 * (double)lam));
    r.conditions.push_back(cond("rho >= 4.4 lambda^(5/2) C^(1/(2 lambda))", gs.rho, rho_rhs,
                                gs.rho >= rho_rhs));
    // this variant takes C0 = 1 (the comparison baseline uses the measured C0)
    if (lam <= 20 && std::isfinite(gs.complexity)) {
      r.value = std::sqrt(N) / (1.8 * lam_pow(lam, (double)lam + 0.25)) / gs.complexity;
    } else {
      r.value = std::exp(0.5 * std::log(N) - std::log(1.8) -
                         ((double)lam + 0.25) * std::log((double)lam) - gs.log_complexity);
    }
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "lili17";
    r.variant = "table";
    r.lower = true;
    r.conditions.push_back(cond("lambda == 2", (double)lam, 2.0, lam == 2));
    const double rho_rhs = 42.5 * std::pow((double)M / gs.tau, 0.25);
    r.conditions.push_back(
        cond("rho >= 42.5 (M/tau)^(1/4)", gs.rho, rho_rhs, gs.rho >= rho_rhs));
    r.value = gs.tau * std::sqrt(N) / (4.5 * std::sqrt((double)M));
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "lili17";
    r.variant = "general";
    r.lower = true;
    r.conditions.push_back(cond("N > 2 lambda^2", N, 2.0 * (double)lam * (double)lam,
                                N > 2.0 * (double)lam * (double)lam));
    const double rho_rhs =
        10.0 * lam_pow(lam, 2.5) *
        std::exp((std::log((double)M) + gs.log_complexity) / (2.0 * (double)lam));
    r.conditions.push_back(cond("rho >= 10 lambda^(5/2) (M C)^(1/(2 lambda))", gs.rho, rho_rhs,
                                gs.rho >= rho_rhs));
    if (lam <= 20 && std::isfinite(gs.complexity)) {
      r.value = std::sqrt(N) /
                (1.5 * std::pow(c0, (double)lam - 1.0) * std::sqrt((double)M) *
                 lam_pow(lam, (double)lam)) /
                gs.complexity;
    } else {
      r.value = std::exp(0.5 * std::log(N) - std::log(1.5) -
                         ((double)lam - 1.0) * std::log(c0) - 0.5 * std::log((double)M) -
                         (double)lam * std::log((double)lam) - gs.log_complexity);
    }
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "kuna18";
    r.lower = true;
    r.caveat_equal_separation = true;
    r.conditions.push_back(cond("lambda == 2", (double)lam, 2.0, lam == 2));
    const long m4 = M / 4;
    const double rho_rhs = m4 >= 1 ? 25.0 * (std::log((double)m4) + 1.0) : kInf;
    r.conditions.push_back(
        cond("rho >= 25 (log floor(M/4) + 1)", gs.rho, rho_rhs, gs.rho >= rho_rhs));
    r.value = gs.tau * std::sqrt(N) / 3.5;
    finish(r);
    out.push_back(std::move(r));
  }

  {
    BoundReport r;
    r.name = "di19";
    r.lower = true;
    r.conditions.push_back(cond("lambda == 2", (double)lam, 2.0, lam == 2));
    r.conditions.push_back(cond("rho >= 3", gs.rho, 3.0, gs.rho >= 3.0));
    r.conditions.push_back(cond("tau <= 1", gs.tau, 1.0, gs.tau <= 1.0));
    r.value = gs.tau * std::sqrt(N) / 1.7;
    finish(r);
    out.push_back(std::move(r));
  }

  return out;
}

BoundReport upper_bound_equispaced(long lambda, double tau, long N) {
  if (lambda < 2) throw std::invalid_argument("upper_bound_equispaced: lambda must be >= 2");
  BoundReport r;
  r.name = "upper_equispaced";
  r.lower = false;
  r.conditions.push_back(cond("tau (lambda-1) <= 1 (cluster fits in a 1/N box)",
                              tau * (double)(lambda - 1), 1.0,
                              tau * (double)(lambda - 1) <= 1.0));

  // C(lambda) = 2 pi sum_l binom(lambda-1, l) l^lambda / lambda!
  double c_lam = 0.0;
  double lam_fact = 1.0;
  for (long k = 2; k <= lambda; ++k) lam_fact *= (double)k;
  for (long l = 0; l <= lambda - 1; ++l) {
    double binom = 1.0;
    for (long i = 0; i < l; ++i) binom = binom * (double)(lambda - 1 - i) / (double)(i + 1);
    c_lam += binom * std::pow((double)l, (double)lambda) / lam_fact;
  }
  c_lam *= 2.0 * kPi;

  const double sn = std::sqrt((double)N);
  r.value = std::pow(kPi * (double)lambda, 0.25) * std::pow(kPi, (double)lambda - 1.0) * sn *
            std::pow(tau, (double)lambda - 1.0) * (1.0 + tau * c_lam * sn);
  finish(r);
  return r;
}

std::vector<BoundReport> upper_bound_pair(const NodeSet& ns) {
  const long M = ns.size();
  if (M < 2) throw std::invalid_argument("upper_bound_pair: need at least two nodes");
  long bj = 0, bk = 1;
  double best = kInf;
  for (long j = 0; j < M; ++j)
    for (long k = j + 1; k < M; ++k) {
      const double w = wrap_distance(ns, j, k);
      if (w < best) {
        best = w;
        bj = j;
        bk = k;
      }
    }
  const double tau = best * (double)ns.N();

  std::vector<double> coords;
  for (int l = 0; l < ns.d; ++l) coords.push_back(ns.node(bj)[l]);
  for (int l = 0; l < ns.d; ++l) coords.push_back(ns.node(bk)[l]);
  const NodeSet pair = make_node_set(ns.d, ns.n, coords);

  std::vector<BoundReport> out;
  {
    BoundReport r;
    r.name = "upper_pair";
    r.variant = "interlacing";
    r.lower = false;
    r.conditions.push_back(cond("closest pair distinct", tau, 0.0, tau > 0.0));
    // lambda_min of the 2x2 principal Gram block, an exact eigenvalue bound
    r.value = pair_sigma_closed_form(pair);
    finish(r);
    out.push_back(std::move(r));
  }
  {
    BoundReport r;
    r.name = "upper_pair";
    r.variant = "closed-form";
    r.lower = false;
    r.conditions.push_back(cond("tau <= 1", tau, 1.0, tau <= 1.0));
    r.value = kPi * tau * std::sqrt((double)ns.d) * std::pow((double)ns.N(), 0.5 * ns.d) /
              std::sqrt(6.0);
    finish(r);
    out.push_back(std::move(r));
  }
  return out;
}

ProofEstimates certificate_proof_estimates(const GeometrySummary& gs, int beta) {
  if (beta < gs.d + 1)
    throw std::invalid_argument("certificate_proof_estimates: need beta >= d+1");
  const double b = (double)beta;
  const double lam = (double)gs.lambda;
  ProofEstimates p;
  p.eps_bound = std::exp(((double)gs.d - b) * std::log(2.0) +
                         std::log(std::pow(2.0, gs.d) - 1.0) + (b + lam) * std::log(lam) +
                         b * std::log(b) + gs.log_complexity +
                         std::log(zeta(b - gs.d + 1.0)) - b * std::log(gs.rho));
  p.f_norm_bound = std::sqrt(1.5) *
                   std::pow(lam * std::sqrt(b) / (double)gs.N, 0.5 * gs.d) *
                   lam_pow(gs.lambda, lam - 0.5) * gs.complexity;
  return p;
}

std::vector<BoundReport> lower_bound_reports(const GeometrySummary& gs) {
  std::vector<BoundReport> out = preset_beta_bounds(gs);
  out.push_back(well_separated(gs));
  out.push_back(pair_cluster(gs));
  if (gs.d == 1) {
    out.push_back(corollary42(gs));
    std::vector<BoundReport> cmp = comparison_bounds(gs);
    for (auto& r : cmp) out.push_back(std::move(r));
  } else {
    const int beta = (gs.d % 2 == 1) ? gs.d + 1 : gs.d + 2;
    out.push_back(theorem41(gs, beta));
  }
  return out;
}

std::string bound_csv_header() {
  return "name,applicable,direction,value,condition_1,condition_2,condition_3,condition_4";
}

std::string bound_csv_row(const BoundReport& r) {
  char buf[192];
  std::string name = r.name;
  if (!r.variant.empty()) name += "/" + r.variant;
  std::string out = name + "," + (r.applicable ? "1" : "0") + "," +
                    (r.lower ? "lower" : "upper") + ",";
  std::snprintf(buf, sizeof(buf), "%.17g", r.value);
  out += buf;
  std::vector<std::string> cells;
  for (const auto& c : r.conditions) {
    std::snprintf(buf, sizeof(buf), "%s [%.6g vs %.6g] %s", c.description.c_str(), c.lhs,
                  c.rhs, c.pass ? "ok" : "FAIL");
    cells.emplace_back(buf);
  }
  if (r.caveat_equal_separation)
    cells.emplace_back("caveat: assumes equal in-cluster separations (not validated)");
  cells.resize(4);
  for (const auto& cell : cells) out += "," + cell;
  return out;
}

std::string bound_explain(const BoundReport& r) {
  std::string out = r.name;
  if (!r.variant.empty()) out += " (" + r.variant + ")";
  out += r.lower ? ": lower bound\n" : ": upper bound\n";
  if (r.name == "theorem41" && r.variant == "beta2lambda")
    out += "  value = sqrt(N) / (1.8 lambda^(lambda+1/4) C)\n";
  else if (r.name == "theorem41" || r.name == "best_beta" || r.name == "weakest_condition")
    out += "  value = N^(d/2) / (const * beta^(d/4) lambda^(lambda+d/2-1/2) C)\n";
  else if (r.name == "corollary42")
    out += "  value = sqrt(N) tau^(lambda-1) / (1.8 (2e)^(lambda-1))\n";
  else if (r.name == "well_separated")
    out += "  value = N^(d/2) / (3 d^(d/4))\n";
  else if (r.name == "pair_cluster")
    out += "  value = tau N^(d/2) / (12 2^((d-1)/2) d^(d/4))\n";
  else if (r.name == "lili17" && r.variant == "table")
    out += "  value = tau sqrt(N) / (4.5 sqrt(M))\n";
  else if (r.name == "lili17")
    out += "  value = sqrt(N) / (1.5 C0^(lambda-1) sqrt(M) lambda^lambda C)\n";
  else if (r.name == "kuna18")
    out += "  value = tau sqrt(N) / 3.5\n";
  else if (r.name == "di19")
    out += "  value = tau sqrt(N) / 1.7\n";
  else if (r.name == "upper_equispaced")
    out += "  value = (pi lambda)^(1/4) pi^(lambda-1) sqrt(N) tau^(lambda-1) "
           "(1 + tau C(lambda) sqrt(N))\n";
  else if (r.name == "upper_pair" && r.variant == "interlacing")
    out += "  value = sqrt(N^d (1 - |prod_l d_n(delta_l)|)), closest pair\n";
  else if (r.name == "upper_pair")
    out += "  value = pi tau sqrt(d) N^(d/2) / sqrt(6)\n";
  for (const auto& c : r.conditions) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  condition: %s [%.6g vs %.6g] %s\n",
                  c.description.c_str(), c.lhs, c.rhs, c.pass ? "ok" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace vand
