#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "superloop/datum.hpp"
#include "superloop/half_int.hpp"
#include "superloop/rational.hpp"

namespace superloop {

/// Z2-parity of generators: Even indexes the A-basis, Odd the U-basis.
enum class Parity : int { Even = 0, Odd = 1 };

struct LoopTerm {
  Parity kind;
  int basis_index;
  int mode;  // exponent of t
  Rational coeff;
};

/// deg(a x t^m) = 1 - m, deg(u x t^m) = 1/2 - m, deg K = 0.
HalfInt loop_degree(Parity kind, int mode);

/// Finite linear combination of generator modes plus a central coefficient.
/// Terms are keyed by (kind, basis_index, mode); zero coefficients pruned.
class LoopElement {
 public:
  using Key = std::tuple<int, int, int>;  // (parity, basis_index, mode)

  LoopElement() = default;

  static LoopElement a_term(int basis_index, int mode, Rational coeff = 1);
  static LoopElement u_term(int basis_index, int mode, Rational coeff = 1);
  static LoopElement central(Rational coeff);

  void add_term(Parity kind, int basis_index, int mode, const Rational& c);
  void add_central(const Rational& c) { k_coeff_ += c; }

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  LoopElement& operator*=(const Rational& c);
  LoopElement operator+(const LoopElement& o) const;
  LoopElement operator-(const LoopElement& o) const;
  bool operator==(const LoopElement& o) const;

  bool is_zero() const { return terms_.empty() && k_coeff_ == 0; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  const Rational& k_coeff() const { return k_coeff_; }

  /// All terms one parity (K counts as even)? Needed for super signs.
  bool is_homogeneous() const;
  /// Parity of a homogeneous element; K-only and zero elements are even.
  Parity parity() const;

  std::vector<LoopTerm> term_list() const;

 private:
  std::map<Key, Rational> terms_;
  Rational k_coeff_ = Rational(0);
};

/// Super-bracket of Theorem-style structure constants:
///   [a(m), b(n)]   = 1/2 (m-n)(ab)(m+n-1) + C(m,3) <a,b> d_{m+n-2,0} K
///   [a(m), u(n)]   = 1/4 (m-2n)(a.u)(m+n-1)
///   [u(m), v(n)]_+ = (u o v)(m+n) + 1/2 m(m-1) <u,v> d_{m+n-1,0} K
///   [. , K]        = 0
/// extended bilinearly; odd-odd pairs use the anticommutator convention.
/// Throws error{errc::datum_mismatch} if a basis index exceeds the datum.
LoopElement bracket(const AlgebraDatum& d, const LoopElement& x,
                    const LoopElement& y);

/// [x,[y,z]] - (-1)^{|x||y|}[y,[x,z]] - [[x,y],z] for Z2-homogeneous inputs;
/// the zero element iff the super Jacobi identity holds on the triple.
LoopElement super_jacobi_residual(const AlgebraDatum& d, const LoopElement& x,
                                  const LoopElement& y, const LoopElement& z);

struct JacobiWitness {
  LoopElement x, y, z;
  LoopElement residual;
};

/// Evaluates the residual on every homogeneous basis triple with modes in
/// [-window, window]. Empty result <=> the bracket is a Lie superalgebra on
/// this window. Requires window >= 4 (the discriminating mode triples for
/// every defect class lie within |mode| <= 4).
std::vector<JacobiWitness> jacobi_scan(const AlgebraDatum& d, int window);

}  // namespace superloop
