#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"

namespace minrep {

/// Twist exponent of the conformal representation family. The distinguished
/// values derive from the manifold dimension dim M = p+q-2 and are exact
/// half-integers.
struct TwistParameter {
  Complex lambda;
};

/// dim M = p + q - 2.
inline int manifold_dim(const Signature& sig) { return sig.n - 2; }
/// Source twist (dim M - 2)/2 = (p+q-4)/2 of the Yamabe intertwiner.
inline double lambda_source(const Signature& sig) { return 0.5 * (sig.n - 4); }
/// Target twist (dim M + 2)/2 = (p+q)/2.
inline double lambda_target(const Signature& sig) { return 0.5 * sig.n; }

/// (varpi_lambda(g^{-1}) F)(x) = Omega(g,x)^lambda F(act(g,x)) at one point.
Complex varpi_point_eval(const GroupElement& g, Complex lambda,
                         const SpectralFunction& f, const SpherePoint& z);

/// varpi_lambda(g^{-1}) F sampled on F's grid. Moved nodes are evaluated
/// through the K-type expansion of F.
GridFunction varpi_act(const GroupElement& g, Complex lambda,
                       const SpectralFunction& f);

/// Grid-function overload: only group elements that permute the grid nodes
/// (identity, m0) are admitted; anything else needs a decomposition first.
GridFunction varpi_act(const GroupElement& g, Complex lambda,
                       const GridFunction& f);

struct MinrepActResult {
  SpectralFunction f;
  /// Mass that landed on K-types off the kernel line (within the cutoffs).
  double nonkernel_mass = 0.0;
  /// Mass beyond the cutoff rectangle.
  double tail_mass = 0.0;
};

/// Default b-cutoff covering the kernel line through a_max with margin.
int default_b_max(const Signature& sig, int a_max);

/// The minimal-representation action: varpi at lambda = (p+q-4)/2 followed
/// by re-decomposition up to the cutoffs. m0 = -I acts exactly as the
/// scalar (-1)^{a+b} on each component.
MinrepActResult minrep_act(const GroupElement& g, const SpectralFunction& f,
                           int a_max, int b_max);

/// || Yamabe(varpi_-(g) F) - varpi_+(g) (Yamabe F) ||_{L2} with both sides
/// resolved up to the cutoffs.
double intertwine_residual(const GroupElement& g, const GridFunction& f,
                           int a_max, int b_max);

/// A conformal map of a planar domain together with its factor Omega > 0.
struct PlanarConformalMap {
  std::function<Eigen::Vector2d(const Eigen::Vector2d&)> phi;
  std::function<double(const Eigen::Vector2d&)> omega;
};

using PlanarFunction = std::function<Complex(const Eigen::Vector2d&)>;

/// Twisted pull-back x -> Omega(x)^lambda f(Phi(x)).
PlanarFunction twisted_pullback(const PlanarConformalMap& map, Complex lambda,
                                const PlanarFunction& f);

/// Homogeneous extension of f on M to the cone: xi -> nu^{deg} f(proj xi).
std::function<Complex(const ConePoint&)> homogeneous_extension(
    const SpectralFunction& f, Complex nu_deg);

/// Split by the simultaneous antipodal map (u,v) -> (-u,-v); the parts sum
/// to f exactly.
std::pair<GridFunction, GridFunction> parity_component(const GridFunction& f);

}  // namespace minrep
