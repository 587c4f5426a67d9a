#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

namespace minrep {

/// Signature (p,q) of the indefinite form on R^{p+q}, with the derived
/// constants used throughout: n = p+q and rho = (p+q-2)/2. rho is a
/// half-integer and therefore exact in double precision; two_rho keeps the
/// integer form for exact arithmetic.
struct Signature {
  int p = 0;
  int q = 0;
  int n = 0;
  int two_rho = 0;  // 2*rho = p+q-2
  bool parity_even = false;

  Signature() = default;
  Signature(int p_, int q_);

  double rho() const { return 0.5 * two_rho; }
  bool operator==(const Signature&) const = default;
};

/// Element of O(p,q): an n x n matrix with g^T I_{p,q} g = I_{p,q}.
/// The constructor rejects matrices violating the relation beyond 1e-12.
struct GroupElement {
  Signature sig;
  Eigen::MatrixXd mat;

  GroupElement(Signature s, Eigen::MatrixXd m);
};

/// Point of the light cone Xi = {(x,y): |x| = |y|} \ {0}, any positive scale.
struct ConePoint {
  Eigen::VectorXd x;
  Eigen::VectorXd y;

  ConePoint(Eigen::VectorXd x_, Eigen::VectorXd y_);
};

/// Point of M = S^{p-1} x S^{q-1}: a pair of unit vectors.
struct SpherePoint {
  Eigen::VectorXd u;
  Eigen::VectorXd v;

  SpherePoint(Eigen::VectorXd u_, Eigen::VectorXd v_);
};

/// The bilinear form sum x_i x'_i - sum y_j y'_j on R^{p,q}.
double indefinite_form(const Signature& sig, const Eigen::VectorXd& z1,
                       const Eigen::VectorXd& z2);

/// nu(x,y) = |x| = |y|, the scale of a cone point.
double nu(const ConePoint& xi);

/// Projection Xi -> M along rays, (x,y) |-> (x/|x|, y/|y|).
SpherePoint project_to_m(const ConePoint& xi);

/// The conformal action of g on M: lift, apply the matrix, project back.
SpherePoint act(const GroupElement& g, const SpherePoint& z);

/// Conformal factor Omega(g,z) = 1/nu(g . z~) where z~ in Xi is the lift
/// of z to M. Strictly positive.
double conformal_factor(const GroupElement& g, const SpherePoint& z);

/// |Omega(g1 g2, z) - Omega(g1, act(g2,z)) Omega(g2,z)|.
double cocycle_residual(const GroupElement& g1, const GroupElement& g2,
                        const SpherePoint& z);

/// Conformal factor squared of the projection restricted to a section
/// transversal to rays through xi: nu(xi)^{-2}.
double section_conformal_factor(const ConePoint& xi);

/// Assorted exact generators for test sweeps: identity, m0 = -I, plane
/// rotations in both factors, and hyperbolic boosts exp(tE).
std::vector<GroupElement> make_generators(const Signature& sig);

GroupElement identity_element(const Signature& sig);
GroupElement m0_element(const Signature& sig);

/// Rotation by angle in the plane of x-coordinates (i,j), 0-based within
/// the first p coordinates.
GroupElement rotation_x(const Signature& sig, int i, int j, double angle);

/// Rotation in the plane of y-coordinates (i,j), 0-based within the last q.
GroupElement rotation_y(const Signature& sig, int i, int j, double angle);

/// exp(t E) with E = E_{1,p+q} + E_{p+q,1}: the hyperbolic block
/// cosh/sinh in the (x_1, y_q) plane.
GroupElement boost(const Signature& sig, double t);

/// Random product of factor rotations and a boost with |t| <= boost_cap.
GroupElement random_group_element(const Signature& sig, std::mt19937_64& rng,
                                  double boost_cap);

/// Uniformly random point of M.
SpherePoint random_sphere_point(const Signature& sig, std::mt19937_64& rng);

}  // namespace minrep
