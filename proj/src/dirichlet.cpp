#include "vand/dirichlet.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace vand {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

cdouble dirichlet_eval(long m, double t) {
  if (m < 1) throw std::invalid_argument("dirichlet_eval: m must be >= 1");
  t -= std::nearbyint(t);
  double s = std::sin(kPi * t);
  if (std::fabs(s) < 1e-14) {
    cdouble acc(0.0, 0.0);
    for (long k = 0; k <= m; ++k) acc += std::polar(1.0, 2.0 * kPi * (double)k * t);
    return acc / (double)(m + 1);
  }
  double num = std::sin(kPi * (double)(m + 1) * t);
  return std::polar(num / ((double)(m + 1) * s), kPi * (double)m * t);
}

cdouble dirichlet_power_eval(const KernelSpec& spec, const double* t) {
  cdouble base(1.0, 0.0);
  for (int l = 0; l < spec.d; ++l) base *= dirichlet_eval(spec.m, t[l]);
  cdouble out(1.0, 0.0);
  for (int b = 0; b < spec.beta; ++b) out *= base;
  return out;
}

const std::vector<double>& dirichlet_power_coeffs(long m, int beta) {
  if (m < 1 || beta < 1)
    throw std::invalid_argument("dirichlet_power_coeffs: need m >= 1, beta >= 1");

  static std::shared_mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<std::vector<double>>> cache;

  const std::pair<long, int> key{m, beta};
  {
    std::shared_lock lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  // beta-fold convolution of the constant vector, computed outside the lock
  const double base = 1.0 / (double)(m + 1);
  std::vector<double> cur(m + 1, base);
  for (int b = 2; b <= beta; ++b) {
    std::vector<double> next(cur.size() + m, 0.0);
    for (size_t i = 0; i < cur.size(); ++i) {
      double ci = cur[i] * base;
      for (long k = 0; k <= m; ++k) next[i + k] += ci;
    }
    cur = std::move(next);
  }

  std::unique_lock lk(mu);
  auto [it, inserted] = cache.try_emplace(key, nullptr);
  if (inserted) it->second = std::make_unique<std::vector<double>>(std::move(cur));
  return *it->second;
}

double kernel_l2_norm_sq(const KernelSpec& spec) {
  const auto& c = dirichlet_power_coeffs(spec.m, spec.beta);
  double s = 0.0;
  for (double x : c) s += x * x;
  double out = 1.0;
  for (int l = 0; l < spec.d; ++l) out *= s;
  return out;
}

cdouble kernel_shifted_inner_product(const KernelSpec& spec, const double* t) {
  const auto& c = dirichlet_power_coeffs(spec.m, spec.beta);
  cdouble prod(1.0, 0.0);
  for (int l = 0; l < spec.d; ++l) {
    cdouble acc(0.0, 0.0);
    const cdouble step = std::polar(1.0, -2.0 * kPi * t[l]);
    cdouble w(1.0, 0.0);
    for (size_t k = 0; k < c.size(); ++k) {
      // re-anchor the running phase so drift never exceeds a few hundred ulp
      if (k % 256 == 0) w = std::polar(1.0, -2.0 * kPi * (double)k * t[l]);
      acc += (c[k] * c[k]) * w;
      w *= step;
    }
    prod *= acc;
  }
  return prod;
}

std::string coeffs_csv(const std::vector<cdouble>& coeffs) {
  std::string out = "index,re,im\n";
  char buf[96];
  for (size_t k = 0; k < coeffs.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", k, coeffs[k].real(),
                  coeffs[k].imag());
    out += buf;
  }
  return out;
}

std::string coeffs_csv(const std::vector<double>& coeffs) {
  std::vector<cdouble> c(coeffs.begin(), coeffs.end());
  return coeffs_csv(c);
}

}  // namespace vand
