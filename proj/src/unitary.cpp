#include "minrep/unitary.hpp"

#include <cmath>
#include <stdexcept>

#include "minrep/representation.hpp"
#include "minrep/spectral.hpp"

namespace minrep {

namespace {

SpectralFunction apply_diagonal(const SpectralFunction& f,
                                const std::function<double(KTypeLabel)>& mul) {
  SpectralFunction out(f.grid());
  for (const auto& [label, comp] : f.components()) {
    ZonalComponent c = comp;
    c.coef *= mul(label);
    out.components().emplace(label, std::move(c));
  }
  out.set_tail_mass(f.tail_mass());
  return out;
}

}  // namespace

SpectralFunction apply_Dp(const SpectralFunction& f) {
  const int p = f.sig().p;
  if (p < 2) throw std::invalid_argument("apply_Dp: p >= 2 required");
  return apply_diagonal(f, [p](KTypeLabel l) {
    return std::sqrt(l.a + 0.5 * (p - 2));
  });
}

SpectralFunction apply_Dq(const SpectralFunction& f) {
  const int q = f.sig().q;
  if (q < 2) throw std::invalid_argument("apply_Dq: q >= 2 required");
  return apply_diagonal(f, [q](KTypeLabel l) {
    return std::sqrt(l.b + 0.5 * (q - 2));
  });
}

NormReport minrep_norm(const SpectralFunction& f) {
  const Signature& sig = f.sig();
  if (sig.p == 2 && sig.q == 2)
    throw std::invalid_argument(
        "minrep_norm: (p,q) = (2,2) is degenerate -- the (0,0) weight "
        "vanishes and the form is a seminorm on the trivial "
        "subrepresentation");
  double kernel_mass = 0.0, nonkernel_mass = 0.0;
  NormReport report;
  for (const auto& [label, comp] : f.components()) {
    const double m = comp.norm_sq();
    if (is_kernel_label(sig, label)) {
      kernel_mass += m;
      const double w = label.a + 0.5 * (sig.p - 2);
      report.per_ktype[label] = w * m;
      report.norm_sq += w * m;
    } else {
      nonkernel_mass += m;
    }
  }
  if (nonkernel_mass > 1e-8 * std::max(kernel_mass, 1e-300))
    throw std::invalid_argument(
        "minrep_norm: function has non-kernel support above tolerance");
  report.tail_mass = f.tail_mass();
  return report;
}

UnitarityReport unitarity_residual(const GroupElement& g,
                                   const SpectralFunction& f, int a_max,
                                   int b_max) {
  const NormReport before = minrep_norm(f);
  if (!(before.norm_sq > 0.0))
    throw std::invalid_argument("unitarity_residual: zero function");
  const MinrepActResult moved = minrep_act(g, f, a_max, b_max);

  // keep only the kernel part for the norm; the off-kernel residue is
  // truncation noise and is reported through tail/nonkernel masses
  SpectralFunction kernel_part(moved.f.grid());
  for (const auto& [label, comp] : moved.f.components())
    if (is_kernel_label(f.sig(), label))
      kernel_part.components().emplace(label, comp);
  kernel_part.set_tail_mass(moved.tail_mass + moved.nonkernel_mass);

  const NormReport after = minrep_norm(kernel_part);
  UnitarityReport rep;
  rep.residual = std::abs(after.norm_sq - before.norm_sq) / before.norm_sq;
  rep.tail_mass = moved.tail_mass + moved.nonkernel_mass;
  return rep;
}

double beckner_gamma(int n, double delta, int k) {
  if (n < 1 || k < 0 || delta < 1.0 || delta > 2.0)
    throw std::invalid_argument("beckner_gamma: bad arguments");
  if (k == 0 || delta == 2.0) return 1.0;
  const double a = static_cast<double>(n) / delta;
  return std::exp(std::lgamma(a) + std::lgamma(k + n - a) -
                  std::lgamma(n - a) - std::lgamma(k + a));
}

double sphere_component_norm_sq(const SphereFunction& f, int k) {
  const SphereFactor& s = *f.sphere;
  const auto basis = s.basis(k);
  const Eigen::MatrixXd e = s.projection_to_centers(k);
  const Eigen::VectorXd vre = e * f.values.real();
  const Eigen::VectorXd vim = e * f.values.imag();
  const Eigen::VectorXd cre = basis->gram_pinv * vre;
  const Eigen::VectorXd cim = basis->gram_pinv * vim;
  const double scale = s.volume() / basis->dim;
  return scale * (cre.dot(basis->gram * cre) + cim.dot(basis->gram * cim));
}

BecknerReport beckner_check(const SphereFunction& f, double delta, int k_max) {
  if (delta < 1.0 || delta > 2.0)
    throw std::invalid_argument("beckner_check: delta in [1,2] required");
  const SphereFactor& s = *f.sphere;
  const int n = s.dim_ambient() - 1;  // the sphere is S^n
  BecknerReport rep;
  for (int k = 0; k <= k_max; ++k)
    rep.lhs += beckner_gamma(n, delta, k) * sphere_component_norm_sq(f, k);
  double ld = 0.0;
  for (int i = 0; i < s.size(); ++i)
    ld += s.weights()[i] * std::pow(std::abs(f.values[i]), delta);
  rep.rhs = std::pow(ld, 2.0 / delta);
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9) + 1e-12;
  return rep;
}

BecknerBoundReport beckner_lower_bound(int n, double delta, int k_max) {
  BecknerBoundReport rep;
  const double expo = n * (1.0 - 2.0 / delta);
  rep.fitted_c = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= k_max; ++k) {
    const double r = beckner_gamma(n, delta, k) / std::pow(k, expo);
    rep.fitted_c = std::min(rep.fitted_c, r);
    if (k == k_max) rep.ratio_at_kmax = r;
  }
  const double a = static_cast<double>(n) / delta;
  rep.stirling_limit = std::exp(std::lgamma(a) - std::lgamma(n - a));
  rep.holds = rep.fitted_c > 0.0 && std::isfinite(rep.fitted_c);
  return rep;
}

}  // namespace minrep
