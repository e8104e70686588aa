#pragma once

#include <string>
#include <vector>

#include "vand/geometry.hpp"
#include "vand/trigpoly.hpp"
#include "vand/types.hpp"

namespace vand {

// Parameters of the Lagrange-like dual basis I_j = G_j * H_j: G_j is the
// in-cluster Lagrange factor on blown-up nodes (frequency step Q) and
// H_j = d_P^beta(. - t_j). Degree budget: P*beta + (lambda-1)*Q <= n.
struct CertificateSpec {
  int beta = 2;
  long Q = 1;
  long P = 1;
  long lambda = 1;
  // The decay lemma assumes beta even and n >= 2 beta^2 lambda. The
  // construction itself only needs Q >= 1 and P >= 1, so we run anyway and
  // flag results computed outside those hypotheses.
  bool within_lemma = true;
};

CertificateSpec make_certificate_spec(const NodeSet& ns, const ClusterDecomposition& cd,
                                      int beta);

// Coordinate used to separate nodes j and k: the one realizing their wrap
// distance, ties broken toward the smallest index.
int separating_coordinate(const NodeSet& ns, long j, long k);

// In-cluster Lagrange factor on blown-up nodes, as explicit coefficients
// (product of two-term factors, one per in-cluster neighbor).
ProductPoly lagrange_G(const NodeSet& ns, const ClusterDecomposition& cd, long j, long Q);

// Same function evaluated directly from the defining product of ratios. At
// in-cluster nodes the numerator vanishes exactly, so this gives the
// Kronecker property without rounding.
cdouble lagrange_G_eval(const NodeSet& ns, const ClusterDecomposition& cd, long j, long Q,
                        const double* t);

// I_j = G_j * H_j as explicit per-coordinate coefficients.
ProductPoly lagrange_like_basis(const NodeSet& ns, const ClusterDecomposition& cd,
                                const CertificateSpec& spec, long j);

// I_j(t) via the ratio product, exact at cluster nodes.
cdouble basis_eval(const NodeSet& ns, const ClusterDecomposition& cd,
                   const CertificateSpec& spec, long j, const double* t);

std::vector<ProductPoly> build_basis(const NodeSet& ns, const ClusterDecomposition& cd,
                                     const CertificateSpec& spec, bool parallel = true);

// M x M column-major Gram of the basis, B[j + k*M] = <I_j, I_k>, exact via
// Parseval on the coefficient representation.
std::vector<cdouble> basis_inner_gram(const std::vector<ProductPoly>& basis,
                                      bool parallel = true);

struct CertificateResult {
  double eps_norm = 0.0;       // l2 norm of the interpolation residual
  double f_l2_norm = 0.0;      // L2(T^d) norm of f = sum_k v_k I_k
  double lower_bound = 0.0;    // (1 - eps_norm) / f_l2_norm when conclusive
  bool conclusive = false;     // false when eps_norm >= 1
  bool within_lemma = true;
  std::vector<double> node_residuals;  // |f(t_j) - v_j| per node
};

// Certified lower bound on ||A* v||_2 for a unit vector v: any trigonometric
// polynomial f with f(t_j) = v_j + eps_j and degree <= n witnesses
// ||A* v|| >= (1 - ||eps||_2) / ||f||_{L2}.
CertificateResult robust_duality_bound(const NodeSet& ns, const ClusterDecomposition& cd,
                                       const CertificateSpec& spec,
                                       const std::vector<cdouble>& v, bool parallel = true);

std::string certificate_csv_header();
std::string certificate_csv_row(const NodeSet& ns, const CertificateSpec& spec,
                                const CertificateResult& r);

}  // namespace vand
