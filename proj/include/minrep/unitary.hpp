#pragma once

#include <map>

#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"

namespace minrep {

/// D_p = (-Laplace_{S^{p-1}} + (p-2)^2/4)^{1/4}: multiplies the component
/// (a,b) by sqrt(a + (p-2)/2).
SpectralFunction apply_Dp(const SpectralFunction& f);

/// Mirror on the second factor: sqrt(b + (q-2)/2).
SpectralFunction apply_Dq(const SpectralFunction& f);

struct NormReport {
  double norm_sq = 0.0;
  std::map<KTypeLabel, double> per_ktype;
  double tail_mass = 0.0;
};

/// Unitary norm of the minimal representation:
///   ||F||^2 = sum (a + (p-2)/2) ||F_{a,b}||^2_{L2}.
/// Requires kernel-supported F (non-kernel mass <= 1e-8 relative) and
/// rejects (p,q) = (2,2), where the (0,0) weight vanishes and the form is
/// only a seminorm (the trivial subrepresentation).
NormReport minrep_norm(const SpectralFunction& f);

struct UnitarityReport {
  double residual = 0.0;
  double tail_mass = 0.0;
};

/// |  ||minrep_act(g,F)|| - ||F||  | / ||F|| with the moved function
/// re-decomposed up to the cutoffs.
UnitarityReport unitarity_residual(const GroupElement& g,
                                   const SpectralFunction& f, int a_max,
                                   int b_max);

/// Beckner coefficient gamma_k on S^n for 1 <= delta <= 2; exactly 1 when
/// delta = 2 or k = 0.
double beckner_gamma(int n, double delta, int k);

/// Samples of a function on a single sphere factor.
struct SphereFunction {
  std::shared_ptr<const SphereFactor> sphere;
  Eigen::VectorXcd values;
};

/// ||P_k f||^2_{L2} on a single sphere.
double sphere_component_norm_sq(const SphereFunction& f, int k);

struct BecknerReport {
  double lhs = 0.0;  // sum_k gamma_k ||F_k||^2
  double rhs = 0.0;  // ||F||^2_{L^delta}
  bool holds = false;
};

/// Both sides of the Beckner inequality by quadrature and spectral
/// projection up to degree k_max.
BecknerReport beckner_check(const SphereFunction& f, double delta, int k_max);

struct BecknerBoundReport {
  double fitted_c = 0.0;       // min_k gamma_k / k^{n(1-2/delta)}
  double stirling_limit = 0.0; // Gamma(n/d)/Gamma(n-n/d), the k->inf ratio
  double ratio_at_kmax = 0.0;
  bool holds = false;          // fitted_c > 0 and bound valid on 1..k_max
};

/// Lower bound gamma_k >= C k^{n(1-2/delta)}: fit C over k <= k_max and
/// verify the asymptotic ratio approaches the Stirling limit.
BecknerBoundReport beckner_lower_bound(int n, double delta, int k_max);

}  // namespace minrep
