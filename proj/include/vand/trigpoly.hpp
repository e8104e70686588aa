#pragma once

#include <string>
#include <vector>

#include "vand/types.hpp"

namespace vand {

// Rank-1 tensor product of univariate trigonometric polynomials: the value at
// t is prod_l sum_m factors[l][m] e^{2 pi i m t_l}. Every multivariate object
// in this library (kernels, Lagrange-like basis functions) factors this way,
// which keeps norms and inner products exact and avoids dense {0..n}^d
// tensors entirely.
struct ProductPoly {
  int d = 1;
  std::vector<std::vector<cdouble>> factors;

  cdouble eval(const double* t) const;
  double norm_sq() const;  // Parseval: prod_l sum_m |c|^2
  long max_degree() const;
};

// <f, g> = integral of conj(f) g = prod_l sum_m conj(f_l[m]) g_l[m].
cdouble product_inner(const ProductPoly& f, const ProductPoly& g);

// One "coord,index,re,im" row per stored coefficient.
std::string product_poly_csv(const ProductPoly& p);

}  // namespace vand
