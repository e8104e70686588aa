#pragma once

#include <vector>

#include "vand/types.hpp"

namespace vand {

// Parameters of the kernel family: the degree-m modified Dirichlet kernel
// raised to the beta-th power, as a tensor product over d coordinates.
struct KernelSpec {
  long m = 1;
  int beta = 1;
  int d = 1;
};

// d_m(t) = e^{pi i m t} sin(pi(m+1)t) / ((m+1) sin(pi t)), equal to the mean
// of e^{2 pi i k t} over k = 0..m. Switches to that coefficient sum when
// |sin(pi t)| < 1e-14 so the removable singularity at integer t never divides
// by zero.
cdouble dirichlet_eval(long m, double t);

// (prod_l d_m(t_l))^beta for a d-vector t.
cdouble dirichlet_power_eval(const KernelSpec& spec, const double* t);

// Fourier coefficients of d_m^beta on frequencies {0,..,m*beta}: the
// beta-fold convolution of the length-(m+1) constant vector 1/(m+1).
// Nonnegative, summing to 1. Memoized; the returned reference stays valid
// for the life of the process and is safe to read concurrently.
const std::vector<double>& dirichlet_power_coeffs(long m, int beta);

// Exact squared L2 norm of the d-variate kernel via Parseval:
// (sum_k c_k^2)^d with c = dirichlet_power_coeffs(m, beta).
double kernel_l2_norm_sq(const KernelSpec& spec);

// Exact inner product <f, f(.-t)> with f = the d-variate kernel, conjugating
// the first argument: prod_l sum_k c_k^2 e^{-2 pi i k t_l}.
cdouble kernel_shifted_inner_product(const KernelSpec& spec, const double* t);

// CSV dump of a univariate coefficient vector, one "index,re,im" row per
// frequency, preceded by a header row.
std::string coeffs_csv(const std::vector<cdouble>& coeffs);
std::string coeffs_csv(const std::vector<double>& coeffs);

}  // namespace vand
