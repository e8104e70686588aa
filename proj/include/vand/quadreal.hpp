#pragma once

#include <quadmath.h>

#include <cmath>
#include <limits>

namespace vand {

// 128-bit float used wherever smallest eigenvalues sit many orders of
// magnitude below the matrix norm; double cannot resolve those at all.
using qreal = __float128;

inline double r_to_double(double x) { return x; }
inline double r_to_double(qreal x) { return (double)x; }

inline double r_sin(double x) { return std::sin(x); }
inline qreal r_sin(qreal x) { return sinq(x); }
inline double r_cos(double x) { return std::cos(x); }
inline qreal r_cos(qreal x) { return cosq(x); }
inline double r_sqrt(double x) { return std::sqrt(x); }
inline qreal r_sqrt(qreal x) { return sqrtq(x); }
inline double r_fabs(double x) { return std::fabs(x); }
inline qreal r_fabs(qreal x) { return fabsq(x); }

template <class R>
inline R r_eps() {
  return std::numeric_limits<R>::epsilon();
}
template <>
inline qreal r_eps<qreal>() {
  return FLT128_EPSILON;
}

template <class R>
inline R r_pi() {
  return (R)3.14159265358979323846;
}
template <>
inline qreal r_pi<qreal>() {
  return M_PIq;
}

// Minimal complex number over an arbitrary real type; std::complex is only
// specified for the three built-in floating types, so it cannot carry qreal.
template <class R>
struct Cplx {
  R re{};
  R im{};
  Cplx() = default;
  Cplx(R r) : re(r), im(R(0)) {}
  Cplx(R r, R i) : re(r), im(i) {}

  friend Cplx operator+(Cplx a, Cplx b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(Cplx a, Cplx b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator*(Cplx a, Cplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cplx operator*(R s, Cplx a) { return {s * a.re, s * a.im}; }
  friend Cplx operator*(Cplx a, R s) { return {s * a.re, s * a.im}; }
  Cplx& operator+=(Cplx b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  Cplx& operator-=(Cplx b) {
    re -= b.re;
    im -= b.im;
    return *this;
  }
};

template <class R>
inline Cplx<R> r_conj(Cplx<R> z) {
  return {z.re, -z.im};
}
template <class R>
inline R r_norm(Cplx<R> z) {
  return z.re * z.re + z.im * z.im;
}
template <class R>
inline R r_abs(Cplx<R> z) {
  return r_sqrt(r_norm(z));
}

}  // namespace vand
