#pragma once

#include <complex>
#include <vector>

#include "minrep/geometry.hpp"
#include "minrep/harmonics.hpp"

namespace minrep {

/// Eigenvalue of the Yamabe operator on the K-type (a,b):
///   -(a + (p-2)/2)^2 + (b + (q-2)/2)^2.
/// Decided in integer arithmetic internally; exact zero on the kernel line.
double yamabe_eigenvalue(const Signature& sig, KTypeLabel label);

/// Whether (a,b) solves |a + (p-2)/2| = |b + (q-2)/2| (integer-exact).
bool is_kernel_label(const Signature& sig, KTypeLabel label);

/// All kernel labels with a <= a_max, b >= 0 and nonzero harmonic spaces
/// on both factors. Empty iff p+q is odd.
std::vector<KTypeLabel> kernel_ktypes(const Signature& sig, int a_max);

/// Multiply each component by its Yamabe eigenvalue; kernel components are
/// annihilated exactly.
SpectralFunction apply_yamabe(const SpectralFunction& f);

struct InfinitesimalCharacter {
  std::vector<Complex> entries;
  /// True for p+q <= 4 where the paper's displayed tuple elides the tail
  /// ambiguously.
  bool display_ambiguous = false;
};

/// Infinitesimal character of the minimal representation:
/// (1, (p+q)/2 - 2, ..., 1, 0). Requires p+q even.
InfinitesimalCharacter infinitesimal_character_minrep(const Signature& sig);

/// Infinitesimal character of the degenerate principal series at lambda:
/// (lambda, (p+q)/2 - 2, ..., (p+q)/2 - floor((p+q)/2)).
InfinitesimalCharacter infinitesimal_character_ps(const Signature& sig,
                                                  Complex lambda);

/// Scalar (+1 or -1) by which m0 = -I acts on the kernel K-type (a,b):
/// (-1)^{a+b}, constant = (-1)^{(p-q)/2} along the kernel line.
int m0_scalar(const Signature& sig, KTypeLabel label);

}  // namespace minrep
