#include "minrep/knapp_stein.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "minrep/quadrature.hpp"

namespace minrep {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  if (std::abs(z.imag()) > 1e-12) return false;
  const double r = std::round(z.real());
  return r <= 0.5 && std::abs(z.real() - r) < 1e-9;
}

int floordiv(int num, int den) {
  int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace

Complex lgamma_complex(Complex z) {
  if (z.real() < 0.5) {
    // reflection; the branch ambiguity disappears under exp
    return std::log(M_PI / std::sin(M_PI * z)) - lgamma_complex(1.0 - z);
  }
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Complex(i, 0.0));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

Complex B_coeff(const KSParams& params, int e1, int e2, KTypeLabel label) {
  const double au = label.a + 0.5 * params.sig.p - 1.0;
  const double bv = label.b + 0.5 * params.sig.q - 1.0;
  return params.lambda - 1.0 - static_cast<double>(e1) * au -
         static_cast<double>(e2) * bv;
}

KSEigenvalue ks_eigenvalue_formula(const KSParams& params, KTypeLabel label) {
  if (params.epsilon != 1 && params.epsilon != -1)
    throw std::invalid_argument("ks_eigenvalue_formula: epsilon must be +-1");
  const int parity = ((label.a - label.b) % 2 + 2) % 2 == 0 ? 1 : -1;
  if (parity != params.epsilon)
    throw std::invalid_argument(
        "ks_eigenvalue_formula: label parity does not match epsilon");

  const Signature& sig = params.sig;
  const Complex lam = params.lambda;
  const Complex num_args[2] = {lam, -B_coeff(params, 1, 1, label)};
  const Complex den_args[5] = {
      Complex(0.5, 0.0),
      (-2.0 * lam + Complex(sig.n - 1 - params.epsilon, 0.0)) / 4.0,
      1.0 + B_coeff(params, -1, -1, label),
      1.0 + B_coeff(params, 1, -1, label),
      1.0 + B_coeff(params, -1, 1, label)};

  KSEigenvalue out;
  Complex log_acc =
      (Complex(0.5 * (sig.n + 2), 0.0) - lam) * std::log(2.0) +
      Complex(0.5 * (sig.n - 1), 0.0) * std::log(M_PI);
  int num_poles = 0, den_poles = 0;
  for (const Complex& z : num_args) {
    if (is_nonpositive_integer(z))
      ++num_poles;
    else
      log_acc += lgamma_complex(z);
  }
  for (const Complex& z : den_args) {
    if (is_nonpositive_integer(z))
      ++den_poles;
    else
      log_acc -= lgamma_complex(z);
  }
  out.order = den_poles - num_poles;
  if (out.order != 0) {
    out.value = Complex(0.0, 0.0);
    return out;
  }
  if (num_poles > 0)
    throw std::domain_error(
        "ks_eigenvalue_formula: matched numerator/denominator poles; value "
        "is direction-dependent");
  const double sign = floordiv(label.a - label.b, 2) % 2 == 0 ? 1.0 : -1.0;
  out.value = sign * std::exp(log_acc);
  return out;
}

double ks_kernel_line_c1(const Signature& sig) {
  const int eps = ((sig.p - sig.q) / 2) % 2 == 0 ? 1 : -1;
  const double garg = 0.25 * (sig.n - 3 - eps);
  return std::tgamma(garg) /
         (std::pow(2.0, 0.5 * (sig.n - 2)) * std::pow(M_PI, 0.5 * (sig.n - 1)));
}

int ks_kernel_line_sign(const Signature& sig) {
  return floordiv(sig.q - sig.p, 4) % 2 == 0 ? 1 : -1;
}

namespace {

// |t|^nu for t > 0 and complex nu
inline Complex pos_pow(double t, Complex nu) {
  return std::exp(nu * std::log(t));
}

inline double sinc(double x) { return std::abs(x) < 1e-12 ? 1.0 : std::sin(x) / x; }

struct KSKernelConsts {
  Complex nu;
  Complex gamma_prefactor;  // 1/Gamma((2 nu + 3 - eps)/4)
  int epsilon;
};

KSKernelConsts kernel_consts(const KSParams& params) {
  KSKernelConsts c;
  c.nu = params.lambda - Complex(0.5 * params.sig.two_rho, 0.0);
  if (c.nu.real() <= -1.0)
    throw std::domain_error(
        "knapp-stein: Re(lambda) - rho must be > -1 (convergent range)");
  const Complex garg = (2.0 * c.nu + Complex(3.0 - params.epsilon, 0.0)) / 4.0;
  c.gamma_prefactor = std::exp(-lgamma_complex(garg));
  c.epsilon = params.epsilon;
  return c;
}

}  // namespace

Complex ks_eigenvalue_numeric(const KSParams& params, KTypeLabel label,
                              const QuadratureGrid& grid) {
  const Signature& sig = params.sig;
  if (!(sig == grid.sig()))
    throw std::invalid_argument("ks_eigenvalue_numeric: signature mismatch");
  const int parity = ((label.a - label.b) % 2 + 2) % 2 == 0 ? 1 : -1;
  if (parity != params.epsilon)
    throw std::invalid_argument(
        "ks_eigenvalue_numeric: label parity does not match epsilon");
  const KSKernelConsts kc = kernel_consts(params);

  const int deg = grid.exact_degree();
  const int n_outer = std::max(256, 8 * deg);
  const int n_inner = std::max(64, deg + 32);
  const QuadRule outer = gauss_legendre(n_outer);
  const QuadRule inner = gauss_jacobi(n_inner, 0.0, kc.nu.real());

  // zonal reduction: both the kernel and the test vector depend only on
  // the polar angles against the base point (e_1, e_q)
  const double volp = sphere_volume(sig.p - 1);
  const double volq = sphere_volume(sig.q - 1);

  Complex acc(0.0, 0.0);
  for (int jo = 0; jo < n_outer; ++jo) {
    const double phi = 0.5 * M_PI * (outer.nodes[jo] + 1.0);
    const double wphi = 0.5 * M_PI * outer.weights[jo];
    const double outer_fac = wphi * zonal_kernel(sig.q, label.b, std::cos(phi)) *
                             std::pow(std::sin(phi), sig.q - 2);

    Complex inner_acc(0.0, 0.0);
    // theta in [phi, pi]: t = cos(theta) - cos(phi) < 0
    // theta in [0, phi]:  t > 0
    for (int side = 0; side < 2; ++side) {
      const double len = side == 0 ? M_PI - phi : phi;
      if (len <= 0.0) continue;
      const double side_sign =
          (side == 0 && kc.epsilon == -1) ? -1.0 : 1.0;
      // scale factor of the substitution theta = phi +- len * s, s in [0,1],
      // with the GJ rule for s^nu on the reference interval
      const Complex scale =
          pos_pow(len, kc.nu + 1.0) / pos_pow(2.0, kc.nu + 1.0);
      Complex piece(0.0, 0.0);
      for (int ji = 0; ji < n_inner; ++ji) {
        const double s = 0.5 * (inner.nodes[ji] + 1.0);
        const double theta = side == 0 ? phi + len * s : phi - len * s;
        // |cos(theta)-cos(phi)| = |theta-phi| * R with R smooth
        const double r = std::abs(std::sin(0.5 * (theta + phi))) *
                         std::abs(sinc(0.5 * (theta - phi)));
        const double smooth = zonal_kernel(sig.p, label.a, std::cos(theta)) *
                              std::pow(std::sin(theta), sig.p - 2);
        piece += inner.weights[ji] * pos_pow(r, kc.nu) * smooth;
      }
      inner_acc += side_sign * scale * piece;
    }
    acc += outer_fac * inner_acc;
  }
  return kc.gamma_prefactor * volp * volq * acc;
}

Complex ks_apply_numeric_torus(const KSParams& params, KTypeLabel label,
                               const SpherePoint& x, int n_outer, int n_inner) {
  const Signature& sig = params.sig;
  if (sig.p != 2 || sig.q != 2)
    throw std::invalid_argument("ks_apply_numeric_torus: p = q = 2 only");
  const KSKernelConsts kc = kernel_consts(params);
  const double nu_re = kc.nu.real();

  const double theta_x = std::atan2(x.u[1], x.u[0]);
  const double phi_x = std::atan2(x.v[1], x.v[0]);

  const QuadRule outer = gauss_legendre(n_outer);
  const QuadRule arc = gauss_jacobi(n_inner, nu_re, nu_re);

  // inner integral over theta for fixed c = cos(phi - phi_x):
  // roots of cos(psi) = c at psi = +-r; two arcs with endpoint
  // singularities of exponent nu on both ends
  auto inner_integral = [&](double c) {
    const double r = std::acos(std::clamp(c, -1.0, 1.0));
    Complex total(0.0, 0.0);
    struct Arc {
      double lo, hi;
      double tsign;
    };
    const Arc arcs[2] = {{-r, r, 1.0}, {r, 2.0 * M_PI - r, -1.0}};
    for (const Arc& A : arcs) {
      const double half = 0.5 * (A.hi - A.lo);
      if (half <= 0.0) continue;
      const double mid = 0.5 * (A.hi + A.lo);
      const double chi = (A.tsign < 0 && kc.epsilon == -1) ? -1.0 : 1.0;
      Complex piece(0.0, 0.0);
      for (int i = 0; i < n_inner; ++i) {
        const double psi = mid + half * arc.nodes[i];
        const double t = std::cos(psi) - c;
        const double denom = (psi - A.lo) * (A.hi - psi);
        const double f = std::abs(t) / denom;  // smooth on the open arc
        const double theta = psi + theta_x;
        piece += arc.weights[i] * pos_pow(f, kc.nu) *
                 std::cos(label.a * theta);
      }
      // (theta-lo)^nu (hi-theta)^nu absorbed by the GJ weight: the mapped
      // rule contributes half^(2 nu + 1)
      total += chi * pos_pow(half, 2.0 * kc.nu + 1.0) * piece;
    }
    return total;
  };

  Complex acc(0.0, 0.0);
  // split the phi circle at the kink locations phi_x and phi_x + pi
  for (int side = 0; side < 2; ++side) {
    const double lo = phi_x + side * M_PI;
    for (int jo = 0; jo < n_outer; ++jo) {
      const double phi = lo + 0.5 * M_PI * (outer.nodes[jo] + 1.0);
      const double w = 0.5 * M_PI * outer.weights[jo];
      const double c = std::cos(phi - phi_x);
      acc += w * std::cos(label.b * (phi - 0.5 * M_PI)) * inner_integral(c);
    }
  }
  return kc.gamma_prefactor * acc;
}

double ks_zonal_value_torus(KTypeLabel label, const SpherePoint& x) {
  const double theta_x = std::atan2(x.u[1], x.u[0]);
  const double phi_x = std::atan2(x.v[1], x.v[0]);
  return std::cos(label.a * theta_x) * std::cos(label.b * (phi_x - 0.5 * M_PI));
}

}  // namespace minrep
