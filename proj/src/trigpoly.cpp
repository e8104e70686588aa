#include "vand/trigpoly.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

namespace vand {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

cdouble ProductPoly::eval(const double* t) const {
  if ((int)factors.size() != d) throw std::invalid_argument("ProductPoly: factor count != d");
  cdouble out = 1.0;
  for (int l = 0; l < d; ++l) {
    const auto& c = factors[l];
    cdouble acc = 0.0;
    cdouble w = 1.0;
    const cdouble step = std::polar(1.0, 2.0 * kPi * t[l]);
    for (size_t m = 0; m < c.size(); ++m) {
      // periodic re-anchor so the incremental phase cannot drift
      if (m % 256 == 0) w = std::polar(1.0, 2.0 * kPi * (double)m * t[l]);
      acc += c[m] * w;
      w *= step;
    }
    out *= acc;
  }
  return out;
}

double ProductPoly::norm_sq() const {
  if ((int)factors.size() != d) throw std::invalid_argument("ProductPoly: factor count != d");
  double out = 1.0;
  for (const auto& c : factors) {
    double s = 0.0;
    for (const auto& z : c) s += std::norm(z);
    out *= s;
  }
  return out;
}

long ProductPoly::max_degree() const {
  long deg = 0;
  for (const auto& c : factors) {
    long last = -1;
    for (size_t m = 0; m < c.size(); ++m)
      if (c[m] != cdouble(0.0)) last = (long)m;
    if (last > deg) deg = last;
  }
  return deg;
}

cdouble product_inner(const ProductPoly& f, const ProductPoly& g) {
  if (f.d != g.d) throw std::invalid_argument("product_inner: dimension mismatch");
  cdouble out = 1.0;
  for (int l = 0; l < f.d; ++l) {
    const auto& a = f.factors[l];
    const auto& b = g.factors[l];
    const size_t len = a.size() < b.size() ? a.size() : b.size();
    cdouble s = 0.0;
    for (size_t m = 0; m < len; ++m) s += std::conj(a[m]) * b[m];
    out *= s;
  }
  return out;
}

std::string product_poly_csv(const ProductPoly& p) {
  std::string out = "coord,index,re,im\n";
  char buf[96];
  for (int l = 0; l < p.d; ++l)
    for (size_t m = 0; m < p.factors[l].size(); ++m) {
      std::snprintf(buf, sizeof(buf), "%d,%zu,%.17g,%.17g\n", l, m, p.factors[l][m].real(),
                    p.factors[l][m].imag());
      out += buf;
    }
  return out;
}

}  // namespace vand
