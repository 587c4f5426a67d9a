#pragma once

#include <Eigen/Dense>

namespace minrep {

/// One-dimensional quadrature rule: nodes in (-1,1) (or as documented) and
/// positive weights.
struct QuadRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Jacobi rule of order n for the weight (1-x)^alpha (1+x)^beta on
/// [-1,1], computed by the Golub-Welsch eigenvalue method. Exact for
/// polynomial integrands of degree <= 2n-1 against that weight.
/// Requires alpha, beta > -1.
QuadRule gauss_jacobi(int n, double alpha, double beta);

/// Gauss-Legendre (alpha = beta = 0). Symmetric nodes, exactly mirrored.
QuadRule gauss_legendre(int n);

}  // namespace minrep
