#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "minrep/geometry.hpp"

namespace minrep {

using Complex = std::complex<double>;

/// K-type label (a,b) for H^a(R^p) x H^b(R^q).
struct KTypeLabel {
  int a = 0;
  int b = 0;
  auto operator<=>(const KTypeLabel&) const = default;
};

/// Gegenbauer polynomial C_k^(alpha)(t). For alpha = 0 the degenerate
/// circle case returns the Chebyshev limit kernel cos(k arccos t).
double gegenbauer(double alpha, int k, double t);

/// dim H^k(R^p); for p = 1 this is 1 for k <= 1 and 0 otherwise.
long long dim_harmonics(int p, int k);

/// Surface volume of S^{p-1}.
double sphere_volume(int p);

/// Zonal kernel normalized to 1 at t = 1: the reproducing kernel of
/// H^a(R^p) is (dim/vol) * zonal_kernel(p, a, u.u').
double zonal_kernel(int p, int a, double t);

/// All degrees 0..kmax at once (three-term recurrence, one pass).
void zonal_kernel_all(int p, int kmax, double t, double* out);

/// A fundamental system of zonal functions for H^a(R^p): well-spread
/// centers plus the pseudo-inverse of their kernel Gram matrix. Fitting a
/// function in H^a from its values at the centers is a single mat-vec.
struct ZonalBasis {
  int p = 0;
  int degree = 0;
  long long dim = 0;
  Eigen::MatrixXd centers;    // m x p
  Eigen::MatrixXd gram;       // m x m, K_a(c_s . c_s')
  Eigen::MatrixXd gram_pinv;  // m x m
};

/// Quadrature + zonal machinery for one sphere factor S^{p-1}.
/// Nodes come from hyperspherical coordinates: Gauss-Jacobi in each
/// cos(theta) with the exact surface-measure weight, uniform nodes in the
/// periodic angle. Exact for polynomials of total degree <= exact_degree.
class SphereFactor {
 public:
  SphereFactor(int p, int exact_degree);

  int dim_ambient() const { return p_; }
  int exact_degree() const { return degree_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const Eigen::MatrixXd& nodes() const { return nodes_; }      // N x p
  const Eigen::VectorXd& weights() const { return weights_; }  // N
  double volume() const { return volume_; }
  /// Index permutation realizing u -> -u on the node set.
  const std::vector<int>& antipode() const { return antipode_; }

  /// Lazily built fundamental system for degree a (cached).
  std::shared_ptr<const ZonalBasis> basis(int a) const;

  /// Values of the projection P_a f at the basis centers, from node values.
  /// E has shape m x N with E[s,i] = (dim/vol) w_i K_a(c_s . u_i).
  Eigen::MatrixXd projection_to_centers(int a) const;

  /// K_a(points . nodes^T): rows = points, cols = nodes.
  Eigen::MatrixXd kernel_matrix(int a, const Eigen::MatrixXd& points) const;

 private:
  int p_;
  int degree_;
  double volume_;
  Eigen::MatrixXd nodes_;
  Eigen::VectorXd weights_;
  std::vector<int> antipode_;
  mutable std::map<int, std::shared_ptr<const ZonalBasis>> bases_;
};

/// Product quadrature grid on M = S^{p-1} x S^{q-1}. Node k = i*Nq + j
/// pairs u-node i with v-node j.
class QuadratureGrid {
 public:
  QuadratureGrid(Signature sig, int exact_degree);

  const Signature& sig() const { return sig_; }
  int exact_degree() const { return degree_; }
  const SphereFactor& ufactor() const { return *u_; }
  const SphereFactor& vfactor() const { return *v_; }
  int size() const { return u_->size() * v_->size(); }
  double weight(int k) const {
    return u_->weights()[k / v_->size()] * v_->weights()[k % v_->size()];
  }
  double total_weight() const;
  SpherePoint point(int k) const;
  /// Flat-index permutation of the simultaneous antipodal map.
  int antipode_index(int k) const;

 private:
  Signature sig_;
  int degree_;
  std::shared_ptr<const SphereFactor> u_;
  std::shared_ptr<const SphereFactor> v_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

GridPtr build_grid(const Signature& sig, int exact_degree);

/// Complex samples on a quadrature grid.
struct GridFunction {
  GridPtr grid;
  Eigen::VectorXcd values;

  GridFunction() = default;
  GridFunction(GridPtr g, Eigen::VectorXcd v);

  static GridFunction from_function(
      const GridPtr& g, const std::function<Complex(const SpherePoint&)>& f);

  int size() const { return static_cast<int>(values.size()); }
};

Complex l2_inner(const GridFunction& f, const GridFunction& g);
double l2_norm(const GridFunction& f);

/// One K-type component in zonal-center form:
///   F_{a,b}(u,v) = sum_{s,t} coef(s,t) K_a(u . c_s) K_b(v . d_t).
struct ZonalComponent {
  KTypeLabel label;
  std::shared_ptr<const ZonalBasis> ubasis;
  std::shared_ptr<const ZonalBasis> vbasis;
  Eigen::MatrixXcd coef;

  double norm_sq() const;
  Complex evaluate(const SpherePoint& z) const;
};

/// Finite sum of K-type components. Components are stored in zonal-center
/// form; grid values are materialized on demand.
class SpectralFunction {
 public:
  SpectralFunction(GridPtr grid) : grid_(std::move(grid)) {}

  const GridPtr& grid() const { return grid_; }
  const Signature& sig() const { return grid_->sig(); }
  const std::map<KTypeLabel, ZonalComponent>& components() const {
    return comps_;
  }
  std::map<KTypeLabel, ZonalComponent>& components() { return comps_; }

  bool has(KTypeLabel l) const { return comps_.count(l) > 0; }
  double component_norm_sq(KTypeLabel l) const;
  double norm_sq() const;
  /// Mass not captured by the stored components (set by decompose).
  double tail_mass() const { return tail_mass_; }
  void set_tail_mass(double t) { tail_mass_ = t; }

  Complex evaluate(const SpherePoint& z) const;
  /// Evaluate at many points (parallel over points).
  Eigen::VectorXcd evaluate_many(const std::vector<SpherePoint>& pts) const;

  GridFunction component_values(KTypeLabel l) const;
  GridFunction to_grid() const;

 private:
  GridPtr grid_;
  std::map<KTypeLabel, ZonalComponent> comps_;
  double tail_mass_ = 0.0;
};

/// Projection of F onto the K-type (a,b) via the zonal reproducing kernels
/// of both factors. Needs grid exactness >= a + b + deg(F) for polynomial F.
GridFunction project_ktype(const GridFunction& f, KTypeLabel label);

/// Zonal-center form of the same projection.
ZonalComponent project_component(const GridFunction& f, KTypeLabel label);

/// Full decomposition over the label rectangle a <= a_max, b <= b_max.
/// tail_mass() of the result reports ||F||^2 - sum of component masses.
SpectralFunction decompose(const GridFunction& f, int a_max, int b_max);

}  // namespace minrep
