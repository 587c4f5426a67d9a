#include "minrep/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace minrep {

namespace {

Eigen::VectorXd ipq_diagonal(const Signature& sig) {
  Eigen::VectorXd d(sig.n);
  d.head(sig.p).setOnes();
  d.tail(sig.q).setConstant(-1.0);
  return d;
}

}  // namespace

Signature::Signature(int p_, int q_) : p(p_), q(q_) {
  if (p < 1 || q < 1) throw std::invalid_argument("Signature: p,q >= 1 required");
  n = p + q;
  two_rho = p + q - 2;
  parity_even = (n % 2 == 0);
}

GroupElement::GroupElement(Signature s, Eigen::MatrixXd m)
    : sig(s), mat(std::move(m)) {
  if (mat.rows() != sig.n || mat.cols() != sig.n)
    throw std::invalid_argument("GroupElement: matrix must be n x n");
  const Eigen::VectorXd d = ipq_diagonal(sig);
  Eigen::MatrixXd res = mat.transpose() * d.asDiagonal() * mat;
  res.diagonal() -= d;
  if (res.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("GroupElement: g^T I_{p,q} g != I_{p,q}");
}

ConePoint::ConePoint(Eigen::VectorXd x_, Eigen::VectorXd y_)
    : x(std::move(x_)), y(std::move(y_)) {
  const double nx = x.norm(), ny = y.norm();
  if (!(nx > 0.0)) throw std::invalid_argument("ConePoint: |x| must be > 0");
  if (std::abs(nx - ny) > 1e-12 * std::max(nx, 1.0))
    throw std::invalid_argument("ConePoint: |x| != |y|");
}

SpherePoint::SpherePoint(Eigen::VectorXd u_, Eigen::VectorXd v_)
    : u(std::move(u_)), v(std::move(v_)) {
  if (std::abs(u.norm() - 1.0) > 1e-12 || std::abs(v.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("SpherePoint: factors must be unit vectors");
}

double indefinite_form(const Signature& sig, const Eigen::VectorXd& z1,
                       const Eigen::VectorXd& z2) {
  if (z1.size() != sig.n || z2.size() != sig.n)
    throw std::invalid_argument("indefinite_form: dimension mismatch");
  return z1.head(sig.p).dot(z2.head(sig.p)) -
         z1.tail(sig.q).dot(z2.tail(sig.q));
}

double nu(const ConePoint& xi) { return xi.x.norm(); }

SpherePoint project_to_m(const ConePoint& xi) {
  return SpherePoint(xi.x / xi.x.norm(), xi.y / xi.y.norm());
}

namespace {

// lift z in M to Xi, apply the matrix, split into (x,y)
std::pair<Eigen::VectorXd, Eigen::VectorXd> apply_lifted(
    const GroupElement& g, const SpherePoint& z) {
  Eigen::VectorXd w(g.sig.n);
  w.head(g.sig.p) = z.u;
  w.tail(g.sig.q) = z.v;
  Eigen::VectorXd gw = g.mat * w;
  return {gw.head(g.sig.p), gw.tail(g.sig.q)};
}

}  // namespace

SpherePoint act(const GroupElement& g, const SpherePoint& z) {
  auto [x, y] = apply_lifted(g, z);
  // the linear action preserves the cone; renormalize both factors by
  // their own norms so the result is exactly unit
  return SpherePoint(x / x.norm(), y / y.norm());
}

double conformal_factor(const GroupElement& g, const SpherePoint& z) {
  auto [x, y] = apply_lifted(g, z);
  return 1.0 / x.norm();
}

double cocycle_residual(const GroupElement& g1, const GroupElement& g2,
                        const SpherePoint& z) {
  if (!(g1.sig == g2.sig))
    throw std::invalid_argument("cocycle_residual: signature mismatch");
  GroupElement g12(g1.sig, g1.mat * g2.mat);
  const double lhs = conformal_factor(g12, z);
  const double rhs = conformal_factor(g1, act(g2, z)) * conformal_factor(g2, z);
  return std::abs(lhs - rhs);
}

double section_conformal_factor(const ConePoint& xi) {
  const double s = nu(xi);
  return 1.0 / (s * s);
}

GroupElement identity_element(const Signature& sig) {
  return GroupElement(sig, Eigen::MatrixXd::Identity(sig.n, sig.n));
}

GroupElement m0_element(const Signature& sig) {
  return GroupElement(sig, -Eigen::MatrixXd::Identity(sig.n, sig.n));
}

GroupElement rotation_x(const Signature& sig, int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= sig.p || j >= sig.p || i == j)
    throw std::invalid_argument("rotation_x: invalid plane");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sig.n, sig.n);
  const double c = std::cos(angle), s = std::sin(angle);
  m(i, i) = c;
  m(j, j) = c;
  m(i, j) = -s;
  m(j, i) = s;
  return GroupElement(sig, std::move(m));
}

GroupElement rotation_y(const Signature& sig, int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= sig.q || j >= sig.q || i == j)
    throw std::invalid_argument("rotation_y: invalid plane");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sig.n, sig.n);
  const double c = std::cos(angle), s = std::sin(angle);
  const int a = sig.p + i, b = sig.p + j;
  m(a, a) = c;
  m(b, b) = c;
  m(a, b) = -s;
  m(b, a) = s;
  return GroupElement(sig, std::move(m));
}

GroupElement boost(const Signature& sig, double t) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sig.n, sig.n);
  const double c = std::cosh(t), s = std::sinh(t);
  const int last = sig.n - 1;
  m(0, 0) = c;
  m(last, last) = c;
  m(0, last) = s;
  m(last, 0) = s;
  return GroupElement(sig, std::move(m));
}

std::vector<GroupElement> make_generators(const Signature& sig) {
  std::vector<GroupElement> gens;
  gens.push_back(identity_element(sig));
  gens.push_back(m0_element(sig));
  if (sig.p >= 2) gens.push_back(rotation_x(sig, 0, 1, 0.7));
  if (sig.p >= 3) gens.push_back(rotation_x(sig, 1, 2, 1.3));
  if (sig.q >= 2) gens.push_back(rotation_y(sig, 0, 1, -0.4));
  if (sig.q >= 3) gens.push_back(rotation_y(sig, 1, 2, 2.1));
  gens.push_back(boost(sig, 0.3));
  gens.push_back(boost(sig, -0.3));
  return gens;
}

GroupElement random_group_element(const Signature& sig, std::mt19937_64& rng,
                                  double boost_cap) {
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::uniform_real_distribution<double> tdist(-boost_cap, boost_cap);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(sig.n, sig.n);
  auto mix = [&](const GroupElement& g) { m = m * g.mat; };
  if (sig.p >= 2) mix(rotation_x(sig, 0, 1, angle(rng)));
  if (sig.p >= 3) mix(rotation_x(sig, 1, 2, angle(rng)));
  mix(boost(sig, tdist(rng)));
  if (sig.q >= 2) mix(rotation_y(sig, 0, 1, angle(rng)));
  if (sig.q >= 3) mix(rotation_y(sig, 1, 2, angle(rng)));
  return GroupElement(sig, std::move(m));
}

SpherePoint random_sphere_point(const Signature& sig, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd u(sig.p), v(sig.q);
  do {
    for (int i = 0; i < sig.p; ++i) u[i] = gauss(rng);
  } while (u.norm() < 1e-8);
  do {
    for (int i = 0; i < sig.q; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-8);
  return SpherePoint(u / u.norm(), v / v.norm());
}

}  // namespace minrep
