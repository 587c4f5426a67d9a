#include "minrep/representation.hpp"

#include <cmath>
#include <stdexcept>

#include "minrep/parallel.hpp"
#include "minrep/spectral.hpp"

namespace minrep {

namespace {

enum class ExactKind { None, Identity, Antipode };

ExactKind classify_exact(const GroupElement& g) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(g.sig.n, g.sig.n);
  if (g.mat == id) return ExactKind::Identity;
  if (g.mat == -id) return ExactKind::Antipode;
  return ExactKind::None;
}

Complex positive_pow(double base, Complex expo) {
  if (expo == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  return std::exp(expo * std::log(base));
}

}  // namespace

Complex varpi_point_eval(const GroupElement& g, Complex lambda,
                         const SpectralFunction& f, const SpherePoint& z) {
  const double omega = conformal_factor(g, z);
  return positive_pow(omega, lambda) * f.evaluate(act(g, z));
}

GridFunction varpi_act(const GroupElement& g, Complex lambda,
                       const SpectralFunction& f) {
  const GridPtr& grid = f.grid();
  if (!(g.sig == grid->sig()))
    throw std::invalid_argument("varpi_act: signature mismatch");
  const ExactKind kind = classify_exact(g);
  if (kind == ExactKind::Identity) return f.to_grid();
  if (kind == ExactKind::Antipode) {
    GridFunction base = f.to_grid();
    Eigen::VectorXcd vals(base.size());
    for (int k = 0; k < base.size(); ++k)
      vals[k] = base.values[grid->antipode_index(k)];
    return GridFunction(grid, std::move(vals));
  }
  Eigen::VectorXcd vals(grid->size());
  parallel_for(grid->size(), [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) {
      const SpherePoint z = grid->point(k);
      const double omega = conformal_factor(g, z);
      vals[k] = positive_pow(omega, lambda) * f.evaluate(act(g, z));
    }
  });
  return GridFunction(grid, std::move(vals));
}

GridFunction varpi_act(const GroupElement& g, Complex lambda,
                       const GridFunction& f) {
  if (!(g.sig == f.grid->sig()))
    throw std::invalid_argument("varpi_act: signature mismatch");
  const ExactKind kind = classify_exact(g);
  if (kind == ExactKind::Identity) return f;
  if (kind == ExactKind::Antipode) {
    Eigen::VectorXcd vals(f.size());
    for (int k = 0; k < f.size(); ++k)
      vals[k] = f.values[f.grid->antipode_index(k)];
    return GridFunction(f.grid, std::move(vals));
  }
  (void)lambda;
  throw std::invalid_argument(
      "varpi_act: group element moves nodes off the grid; decompose the "
      "function first and use the spectral overload");
}

int default_b_max(const Signature& sig, int a_max) {
  int b = a_max + 2;
  if (sig.p > sig.q) b += (sig.p - sig.q) / 2;
  return b;
}

MinrepActResult minrep_act(const GroupElement& g, const SpectralFunction& f,
                           int a_max, int b_max) {
  const Signature& sig = f.sig();
  MinrepActResult out{SpectralFunction(f.grid()), 0.0, 0.0};

  const ExactKind kind = classify_exact(g);
  if (kind != ExactKind::None) {
    // identity and m0 act exactly component-wise; m0 scales (a,b) by
    // (-1)^{a+b} since Omega == 1 and F_{a,b}(-u,-v) = (-1)^{a+b} F_{a,b}
    for (const auto& [label, comp] : f.components()) {
      ZonalComponent c = comp;
      if (kind == ExactKind::Antipode && (label.a + label.b) % 2 != 0)
        c.coef = -c.coef;
      if (!is_kernel_label(sig, label)) out.nonkernel_mass += c.norm_sq();
      out.f.components().emplace(label, std::move(c));
    }
    out.tail_mass = f.tail_mass();
    out.f.set_tail_mass(f.tail_mass());
    return out;
  }

  const GridFunction moved = varpi_act(g, Complex(lambda_source(sig), 0.0), f);
  out.f = decompose(moved, a_max, b_max);
  out.tail_mass = out.f.tail_mass();
  for (const auto& [label, comp] : out.f.components())
    if (!is_kernel_label(sig, label)) out.nonkernel_mass += comp.norm_sq();
  return out;
}

double intertwine_residual(const GroupElement& g, const GridFunction& f,
                           int a_max, int b_max) {
  const SpectralFunction s = decompose(f, a_max, b_max);
  const Complex lm(lambda_source(f.grid->sig()), 0.0);
  const Complex lp(lambda_target(f.grid->sig()), 0.0);

  // Yamabe after moving at the source twist
  const GridFunction moved = varpi_act(g, lm, s);
  const GridFunction side1 =
      apply_yamabe(decompose(moved, a_max, b_max)).to_grid();
  // moving at the target twist after Yamabe
  const GridFunction side2 = varpi_act(g, lp, apply_yamabe(s));

  GridFunction diff(f.grid, side1.values - side2.values);
  return l2_norm(diff);
}

PlanarFunction twisted_pullback(const PlanarConformalMap& map, Complex lambda,
                                const PlanarFunction& f) {
  return [map, lambda, f](const Eigen::Vector2d& x) {
    const double omega = map.omega(x);
    if (!(omega > 0.0))
      throw std::invalid_argument("twisted_pullback: Omega must be positive");
    return positive_pow(omega, lambda) * f(map.phi(x));
  };
}

std::function<Complex(const ConePoint&)> homogeneous_extension(
    const SpectralFunction& f, Complex nu_deg) {
  // copy of the spectral data keeps the handle self-contained
  auto fc = std::make_shared<const SpectralFunction>(f);
  return [fc, nu_deg](const ConePoint& xi) {
    return positive_pow(nu(xi), nu_deg) * fc->evaluate(project_to_m(xi));
  };
}

std::pair<GridFunction, GridFunction> parity_component(const GridFunction& f) {
  const GridPtr& grid = f.grid;
  Eigen::VectorXcd even(f.size());
  for (int k = 0; k < f.size(); ++k)
    even[k] = 0.5 * (f.values[k] + f.values[grid->antipode_index(k)]);
  Eigen::VectorXcd odd = f.values - even;
  return {GridFunction(grid, std::move(even)), GridFunction(grid, std::move(odd))};
}

}  // namespace minrep
