#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace vand {

using cdouble = std::complex<double>;

// A configuration of M nodes on the d-torus together with the per-coordinate
// degree n.  The trigonometric system has N = n+1 frequencies per coordinate,
// so the associated Vandermonde matrix is M x N^d.  Coordinates are stored
// row-major (node j occupies coords[j*d .. j*d+d-1]) and are reduced into
// [0,1) on construction.
struct NodeSet {
  int d = 1;
  long n = 1;
  std::vector<double> coords;

  long size() const { return d > 0 ? (long)(coords.size() / (std::size_t)d) : 0; }
  long N() const { return n + 1; }
  // N^d as a double; exact for every size this library accepts.
  double Npow() const { return std::pow((double)(n + 1), d); }
  const double* node(long j) const { return coords.data() + (std::size_t)j * d; }
  // M < N^d is the rectangular (overdetermined transpose) setting the theory
  // assumes; violating it is allowed but worth surfacing to the caller.
  bool within_definition() const { return (double)size() < Npow(); }
};

// Validates d, n and the coordinate count, reduces every coordinate mod 1.
NodeSet make_node_set(int d, long n, std::vector<double> coords);

}  // namespace vand
