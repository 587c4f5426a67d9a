#pragma once

#include <complex>

#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"

namespace minrep {

/// Parameters of the Knapp-Stein intertwiner A_{lambda,epsilon}.
struct KSParams {
  Signature sig;
  Complex lambda;
  int epsilon = 1;  // +1 or -1
};

/// log Gamma for complex arguments (Lanczos with reflection).
Complex lgamma_complex(Complex z);

/// B_lambda^{e1,e2}(a,b) = lambda - 1 - e1 (a + p/2 - 1) - e2 (b + q/2 - 1).
Complex B_coeff(const KSParams& params, int e1, int e2, KTypeLabel label);

/// Closed-form eigenvalue with explicit zero/pole bookkeeping. order > 0:
/// the value is an exact zero (a reciprocal Gamma in the denominator
/// vanished); order < 0: the formula has a pole; order == 0: regular.
struct KSEigenvalue {
  Complex value{0.0, 0.0};
  int order = 0;
  bool is_zero() const { return order > 0; }
  bool is_pole() const { return order < 0; }
};

/// The Gamma-ratio eigenvalue of A_{lambda,epsilon} on H^a x H^b.
/// Requires the parity pairing epsilon = (-1)^{a-b}.
KSEigenvalue ks_eigenvalue_formula(const KSParams& params, KTypeLabel label);

/// Constant of the kernel-line reduction at lambda = 1 as displayed in the
/// paper trail: c1 = Gamma((p+q-3-(-1)^{(p-q)/2})/4) / (2^{(p+q-2)/2}
/// pi^{(p+q-1)/2}), together with the sign (-1)^{[(q-p)/4]}.
double ks_kernel_line_c1(const Signature& sig);
int ks_kernel_line_sign(const Signature& sig);

/// Eigenvalue by quadrature: applies the integral kernel to the zonal
/// vector of type (a,b) centered at (e_1, e_q) and evaluates at the center.
/// Valid in the convergent range Re(lambda) - rho > -1. The singular
/// factor |t|^nu is handled by split Gauss-Jacobi rules around the
/// hypersurface t = 0.
Complex ks_eigenvalue_numeric(const KSParams& params, KTypeLabel label,
                              const QuadratureGrid& grid);

/// (A Y)(x) on S^1 x S^1 at an arbitrary point x (p = q = 2 only), for the
/// zonal vector Y of type (a,b) centered at (e_1, e_q). Used to test the
/// eigenvector property away from the base point.
Complex ks_apply_numeric_torus(const KSParams& params, KTypeLabel label,
                               const SpherePoint& x, int n_outer, int n_inner);

/// Value of the base zonal vector at a point (p = q = 2 only).
double ks_zonal_value_torus(KTypeLabel label, const SpherePoint& x);

}  // namespace minrep
