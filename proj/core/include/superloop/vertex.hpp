#pragma once

#include <string>
#include <vector>

#include "superloop/module.hpp"

namespace superloop {

/// Modes of composite states in the vacuum module. `state` must be a
/// homogeneous vector of V(ell,0); its n-th mode applied to `target` is
/// computed by peeling the leading creation symbol with the iterate formula
///   (x_{-m} R)_n = sum_i (-1)^i C(-m,i) ( x_{-m-i} R_{n+i}
///                   - (-1)^{|x||R|} (-1)^m R_{-m+n-i} x_i ),
/// whose two sums are finite on any fixed target. Base cases: the vacuum
/// (1_n = delta_{n,-1}) and single generator states (Lie-algebra modes).
/// Throws error{errc::truncation_uncertain} if any discarded high-degree
/// term could have contributed.
ModuleVector composite_mode(const InducedModule& mod, const ModuleVector& state,
                            long n, const ModuleVector& target);

/// Residual of the commutator formula
///   u_m v_n - (-1)^{|u||v|} v_n u_m = sum_i C(m,i) (u_i v)_{m+n-i}
/// applied to target; exactly zero when the identity holds on the sample.
ModuleVector commutator_residual(const InducedModule& mod,
                                 const ModuleVector& u, const ModuleVector& v,
                                 long m, long n, const ModuleVector& target);

/// Residual of skew symmetry
///   u_n v = (-1)^{|u||v|} (-1)^{n+1} ( v_n u
///           + sum_{i>=1} (1/i!) (-1)^i D^i v_{n+i} u ),
/// with the translation operator realizing L(-1). The series is bounded by
/// annihilation, not by the truncation degree.
ModuleVector skew_symmetry_residual(const InducedModule& mod,
                                    const ModuleVector& u,
                                    const ModuleVector& v, long n);

struct IdentityCheck {
  std::string identity;
  std::string witness;
  ModuleVector residual;
  bool ok() const { return residual.is_zero(); }
};

struct VerifyReport {
  std::vector<IdentityCheck> checks;
  bool all_zero() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  std::vector<IdentityCheck> failures() const {
    std::vector<IdentityCheck> out;
    for (const auto& c : checks)
      if (!c.ok()) out.push_back(c);
    return out;
  }
};

struct StructureOptions {
  int mode_window = 2;      // modes m,n in [-window, window] for brackets
  HalfInt state_cap = HalfInt::whole(2);  // sample states up to this degree
};

/// Bundled structure identities of the vacuum module, evaluated on every
/// generator pair/triple and sampled states:
///   a0_on_odd            a_0 v = 2/3 D a_1 v
///   odd0_on_even         v_0 a = 1/3 D v_1 a
///   l1_bracket_even      [L(1), a_n] = (2-n) a_{n+1}
///   l1_bracket_odd       [L(1), u_n] = (1-n) u_{n+1}
///   compat_form          <a.u, v> = <u, a.v> = 4/3 <a, u o v>, read inside
///                        the module where scalars carry the level factor
///   compat_circ          (a.u, v) = a(u, v) = (u, a.v) via zero modes
///   bracket_even         [a_m, b_n] = 1/2(m-n)(a_1 b)_{m+n-1} + C(m,3) s d
///   bracket_mixed        [a_m, u_n] = 1/3(m-2n)(a_1 u)_{m+n-1}
///   bracket_odd          [u_m, v_n]_+ = (u_0 v)_{m+n} + 1/2 m(m-1) s d
///   zero_mode_half_derivative   a_0 b = 1/2 D(ab)
///   zero_mode_vs_first          a_0 b = 1/2 D(a_1 b)
///   odd_exchange         u_2(v_{-1}w - 1/2 D v_0 w) = l(<u,v>w - <u,w>v)
/// Requires the vacuum kind, an identity element, and max_degree >= 4.
VerifyReport verify_structure_identities(const InducedModule& mod,
                                         const StructureOptions& opt = {});

/// Commutator-formula and skew-symmetry residual grids over all generator
/// state pairs, modes in [-window, window], and basis targets up to
/// state_cap. Combinations whose intermediates would cross the truncation
/// bound are skipped.
VerifyReport verify_commutator_skew_grids(const InducedModule& mod, int window,
                                          HalfInt state_cap);

struct PSubspaceDims {
  long dim_p = 0;
  long dim_l1v2 = 0;
  long dim_degree3 = 0;
  bool direct_sum = false;  // spans independent and jointly exhausting
};

/// Splits the degree-3 slice as D(degree-2) + span{u_{-1}v - 1/2 D u_0 v}.
PSubspaceDims p_subspace_dim(const InducedModule& mod);

/// Virasoro families realized by the conformal element (twice the identity):
///   [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 delta ell
///   [L(m), a_n]  = (m+1-n) a_{m+n} + 1/6 (m^3-m) <w,a> delta ell
///   [L(m), u_n]  = 1/2 (m+1-2n) u_{m+n}
/// plus L(-1) = D and the L(0)-grading, on all basis states of degree up to
/// state_cap (default max_degree) whose intermediates stay below the
/// truncation bound.
VerifyReport verify_virasoro(const InducedModule& mod, int window,
                             std::optional<HalfInt> state_cap = std::nullopt);

}  // namespace superloop
