#include "minrep/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace minrep {

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
// matrix built from the three-term recurrence of the (monic) Jacobi
// polynomials; weights are mu0 * (first eigenvector component)^2.
QuadRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi: exponents must be > -1");

  const double ab = alpha + beta;
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 0);
  // recurrence x p_k = p_{k+1} + a_k p_k + b_k p_{k-1} for monic Jacobi
  diag[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double d = 2.0 * k + ab;
    diag[k] = (beta * beta - alpha * alpha) / (d * (d + 2.0));
    double b2;
    if (k == 1) {
      b2 = 4.0 * (alpha + 1.0) * (beta + 1.0) /
           ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
           ((d * d) * (d + 1.0) * (d - 1.0));
    }
    sub[k - 1] = std::sqrt(b2);
  }

  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) J(k, k) = diag[k];
  for (int k = 0; k + 1 < n; ++k) {
    J(k, k + 1) = sub[k];
    J(k + 1, k) = sub[k];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: eigen decomposition failed");

  // total mass of the weight: 2^(a+b+1) B(a+1, b+1)
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) +
                              std::lgamma(alpha + 1.0) +
                              std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));

  QuadRule rule;
  rule.nodes = es.eigenvalues();
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    const double v = es.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v * v;
  }

  // symmetric weights: enforce exact mirror symmetry of the node set so
  // that the antipodal map is an index permutation
  if (alpha == beta) {
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
      const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
      rule.nodes[i] = -t;
      rule.nodes[j] = t;
      const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
      rule.weights[i] = w;
      rule.weights[j] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

QuadRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

}  // namespace minrep
