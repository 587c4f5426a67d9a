#include "minrep/spectral.hpp"

#include <cstdlib>
#include <stdexcept>

namespace minrep {

namespace {

// twice the half-integer offsets: 2a+p-2 and 2b+q-2
inline long long two_au(const Signature& sig, KTypeLabel l) {
  return 2LL * l.a + sig.p - 2;
}
inline long long two_bv(const Signature& sig, KTypeLabel l) {
  return 2LL * l.b + sig.q - 2;
}

}  // namespace

double yamabe_eigenvalue(const Signature& sig, KTypeLabel label) {
  if (label.a < 0 || label.b < 0)
    throw std::invalid_argument("yamabe_eigenvalue: labels must be >= 0");
  const long long au = two_au(sig, label), bv = two_bv(sig, label);
  // (bv^2 - au^2)/4 exactly; the numerator is a difference of squares of
  // integers, so the kernel condition is decided without tolerance
  return static_cast<double>(bv * bv - au * au) / 4.0;
}

bool is_kernel_label(const Signature& sig, KTypeLabel label) {
  if (label.a < 0 || label.b < 0) return false;
  return std::llabs(two_au(sig, label)) == std::llabs(two_bv(sig, label));
}

std::vector<KTypeLabel> kernel_ktypes(const Signature& sig, int a_max) {
  std::vector<KTypeLabel> out;
  for (int a = 0; a <= a_max; ++a) {
    if (dim_harmonics(sig.p, a) == 0) continue;
    const long long au = two_au(sig, {a, 0});
    // solve |au| = |2b+q-2| over nonnegative integers b
    for (const long long target : {au, -au}) {
      const long long num = target - sig.q + 2;
      if (num < 0 || num % 2 != 0) continue;
      const int b = static_cast<int>(num / 2);
      if (dim_harmonics(sig.q, b) == 0) continue;
      KTypeLabel l{a, b};
      if (!out.empty() && out.back() == l) continue;
      out.push_back(l);
    }
  }
  return out;
}

SpectralFunction apply_yamabe(const SpectralFunction& f) {
  SpectralFunction out(f.grid());
  for (const auto& [label, comp] : f.components()) {
    ZonalComponent c = comp;
    if (is_kernel_label(f.sig(), label)) {
      c.coef.setZero();
    } else {
      c.coef *= yamabe_eigenvalue(f.sig(), label);
    }
    out.components().emplace(label, std::move(c));
  }
  out.set_tail_mass(f.tail_mass());
  return out;
}

InfinitesimalCharacter infinitesimal_character_minrep(const Signature& sig) {
  if (!sig.parity_even)
    throw std::domain_error(
        "infinitesimal_character_minrep: p+q must be even (V^{p,q} = 0 "
        "otherwise)");
  const int m = sig.n / 2;
  InfinitesimalCharacter chi;
  chi.entries.push_back(Complex(1.0, 0.0));
  for (int j = m - 2; j >= 0; --j) chi.entries.push_back(Complex(j, 0.0));
  chi.display_ambiguous = sig.n <= 4;
  return chi;
}

InfinitesimalCharacter infinitesimal_character_ps(const Signature& sig,
                                                  Complex lambda) {
  InfinitesimalCharacter chi;
  chi.entries.push_back(lambda);
  const int half_floor = sig.n / 2;
  for (int j = 2; j <= half_floor; ++j)
    chi.entries.push_back(Complex(0.5 * sig.n - j, 0.0));
  chi.display_ambiguous = sig.n <= 4;
  return chi;
}

int m0_scalar(const Signature& sig, KTypeLabel label) {
  if (!is_kernel_label(sig, label))
    throw std::invalid_argument("m0_scalar: label is not on the kernel line");
  return (label.a + label.b) % 2 == 0 ? 1 : -1;
}

}  // namespace minrep
