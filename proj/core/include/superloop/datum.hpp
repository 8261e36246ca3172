#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superloop/rational.hpp"

namespace superloop {

/// Structure constants of the input pair: a commutative algebra A with a
/// bilinear form, a left A-module U with an A-valued product `circ` and a
/// scalar form. All tensors are over a fixed basis, scalars exact rationals.
///
/// Index conventions:
///   mul_a[i][j][k]  coefficient of e_k in e_i * e_j
///   act[i][p][q]    coefficient of f_q in e_i . f_p
///   circ[p][q][k]   coefficient of e_k in f_p o f_q
struct AlgebraDatum {
  int dim_a = 0;
  int dim_u = 0;
  RatTensor3 mul_a;
  RatMat form_a;
  RatTensor3 act;
  RatTensor3 circ;
  RatMat form_u;
  /// Coordinates of the identity of A when one exists (equals half the
  /// conformal element).
  std::optional<RatVec> identity_a;

  /// e_i * e_j as a coordinate vector.
  RatVec product_a(int i, int j) const;
  /// e_i . f_p as a coordinate vector in U.
  RatVec action(int i, int p) const;
  /// f_p o f_q as a coordinate vector in A.
  RatVec circle(int p, int q) const;

  /// Bilinear extensions over coordinate vectors.
  RatVec product_a(const RatVec& x, const RatVec& y) const;
  RatVec action(const RatVec& a, const RatVec& u) const;
  RatVec circle(const RatVec& u, const RatVec& v) const;
  Rational pair_a(const RatVec& x, const RatVec& y) const;
  Rational pair_u(const RatVec& u, const RatVec& v) const;

  /// Conformal element (twice the identity); requires identity_a.
  RatVec omega() const;

  /// Throws error{errc::dimension_mismatch} if any tensor shape disagrees
  /// with dim_a/dim_u, or the stored identity fails to act as identity.
  void check_shapes() const;
};

enum class datum_condition {
  comm_a,
  assoc_a,
  form_a_sym,
  form_a_assoc,
  module_axiom,
  form_u_sym,
  circ_sym,
  cond_iii_form,
  cond_iii_circ_action,
  cond_iii_circ_module,
};

const char* condition_name(datum_condition c);

struct DatumViolation {
  datum_condition condition;
  std::vector<int> witness;  // basis indices of the failing triple/pair
  RatVec lhs;
  RatVec rhs;
};

/// Empty violation list iff the datum carries a Lie-superalgebra structure
/// on its loop space. rank_form_a / rank_form_u are informational (the
/// simple-quotient embedding needs nondegeneracy, construction does not).
struct DatumReport {
  std::vector<DatumViolation> violations;
  std::size_t rank_form_a = 0;
  std::size_t rank_form_u = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks, on every basis triple: commutativity and associativity of A,
/// symmetry and associativity of the A-form, the module axiom a(bu)=(ab)u,
/// symmetry of the U-form and of circ, and the three compatibility families
///   <a.u, v> = <u, a.v> = 4/3 <a, u o v>
///   a(u o v) = (a.u) o v = u o (a.v)
///   (u o v).w = (v o w).u = (w o u).v
/// All identities are multilinear, so basis triples suffice.
DatumReport verify_datum(const AlgebraDatum& d);

/// Solves e*x = x on A and e.f = f on U; unique when it exists. On success
/// the result is also stored into d.identity_a.
std::optional<RatVec> find_identity(AlgebraDatum& d);

/// True iff <omega, omega> = 1/2 for omega = 2*identity; this is the
/// normalization under which the central charge equals the level.
/// Throws error{errc::no_identity} when identity_a is absent.
bool conformal_normalization_check(const AlgebraDatum& d);

/// dim A = dim U = 1 datum with ww = 2w, <w,w> = 1/2, w.g = 2g,
/// g o g = 2w, <g,g> = 2/3. Generates the N=1 superconformal mode algebra.
AlgebraDatum build_ns();

/// A = Q[x]/(x^{n+1}) with basis 1, x, ..., x^n; form <u,v> = f(uv) with
/// f(1) overridden to 1/8 so the conformal normalization holds; U = A as an
/// ideal module with u o v = (3/4) uv. Throws error{errc::degenerate_pivot}
/// if f(x^n) = 0.
AlgebraDatum build_trunc_poly(int n, const RatVec& f);

/// Replaces the module half by U = A: act = mul, circ = (3/4) mul,
/// form_u = form_a.
AlgebraDatum build_ideal_module(const AlgebraDatum& a_datum);

}  // namespace superloop
