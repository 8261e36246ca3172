#include "superloop/vertex.hpp"

#include <sstream>

#include "superloop/error.hpp"
#include "superloop/linalg.hpp"

namespace superloop {

namespace {

HalfInt max_degree_of(const ModuleVector& v) {
  HalfInt d = HalfInt::whole(0);
  for (const auto& [m, c] : v.entries()) d = std::max(d, m.degree());
  return d;
}

// Weight of the generator state behind a symbol kind: 2 for even, 3/2 odd.
HalfInt generator_weight(Parity kind) {
  return kind == Parity::Even ? HalfInt::whole(2) : HalfInt::from_twice(3);
}

ModuleVector state_of(const InducedModule& mod, Parity kind, int index) {
  return ModuleVector::monomial(PBWMonomial{{ModeSymbol{kind, index, -1}}});
}

// LoopElement for an A-coordinate vector at a given mode.
LoopElement even_mode_of(const RatVec& coords, int mode) {
  LoopElement e;
  for (std::size_t i = 0; i < coords.size(); ++i)
    e.add_term(Parity::Even, static_cast<int>(i), mode, coords[i]);
  return e;
}

ModuleVector composite_mode_word(const InducedModule& mod,
                                 const std::vector<ModeSymbol>& word, long n,
                                 const ModuleVector& target) {
  if (target.is_zero()) {
    ModuleVector out;
    out.absorb_flag(target);
    return out;
  }
  if (word.empty()) {
    if (n == -1) return target;
    ModuleVector out;
    out.absorb_flag(target);
    return out;
  }
  if (word.size() == 1 && word[0].mode == -1) {
    const ModeSymbol gen{word[0].kind, word[0].basis_index,
                         static_cast<int>(n)};
    return mod.apply_mode(gen, target);
  }

  const ModeSymbol lead = word.front();
  const std::vector<ModeSymbol> rest(word.begin() + 1, word.end());
  const long m = -static_cast<long>(lead.mode);  // lead = x(-m), m >= 1
  HalfInt rest_deg = HalfInt::whole(0);
  int rest_odd = 0;
  for (const auto& s : rest) {
    rest_deg += s.degree();
    if (s.kind == Parity::Odd) ++rest_odd;
  }
  const bool koszul = lead.kind == Parity::Odd && rest_odd % 2 == 1;
  // overall factor -(-1)^{|x||R|}(-1)^m of the second sum
  const Rational swap_sign =
      Rational(-1) * (koszul ? -1 : 1) * ((m % 2 == 0) ? 1 : -1);
  const HalfInt target_deg = max_degree_of(target);

  ModuleVector out;
  out.absorb_flag(target);

  // sum 1: x_{-m-i} ( R_{n+i} target ); zero once deg(R)+deg(target)-n-i-1 < 0
  {
    const long bound2 = rest_deg.twice() + target_deg.twice() - 2 * n - 2;
    const long i_max = (bound2 >= 0) ? bound2 / 2 : -1;
    for (long i = 0; i <= i_max; ++i) {
      const Rational coeff = ((i % 2 == 0) ? 1 : -1) * binomial(-m, static_cast<unsigned>(i));
      if (coeff == 0) continue;
      ModuleVector inner = composite_mode_word(mod, rest, n + i, target);
      out.absorb_flag(inner);
      if (inner.is_zero()) continue;
      ModuleVector piece = mod.apply_mode(
          ModeSymbol{lead.kind, lead.basis_index, static_cast<int>(-m - i)},
          inner);
      piece *= coeff;
      out.absorb_flag(piece);
      out += piece;
    }
  }

  // sum 2: -(-1)^{|x||R|}(-1)^m R_{-m+n-i} ( x_i target )
  {
    const long bound2 =
        generator_weight(lead.kind).twice() + target_deg.twice() - 2;
    const long i_max = (bound2 >= 0) ? bound2 / 2 : -1;
    for (long i = 0; i <= i_max; ++i) {
      const Rational coeff = ((i % 2 == 0) ? 1 : -1) *
                             binomial(-m, static_cast<unsigned>(i)) * swap_sign;
      if (coeff == 0) continue;
      ModuleVector hit = mod.apply_mode(
          ModeSymbol{lead.kind, lead.basis_index, static_cast<int>(i)}, target);
      out.absorb_flag(hit);
      if (hit.is_zero()) continue;
      ModuleVector piece = composite_mode_word(mod, rest, -m + n - i, hit);
      piece *= coeff;
      out.absorb_flag(piece);
      out += piece;
    }
  }
  return out;
}

ModuleVector composite_mode_impl(const InducedModule& mod,
                                 const ModuleVector& state, long n,
                                 const ModuleVector& target) {
  ModuleVector out;
  out.absorb_flag(state);
  out.absorb_flag(target);
  for (const auto& [m, c] : state.entries()) {
    ModuleVector piece = composite_mode_word(mod, m.word, n, target);
    piece *= c;
    out.absorb_flag(piece);
    out += piece;
  }
  return out;
}

int state_parity(const ModuleVector& v, const char* who) {
  const auto p = v.homogeneous_parity();
  if (!p)
    throw error(errc::invalid_argument,
                std::string(who) + " must be Z2-homogeneous");
  return *p;
}

}  // namespace

ModuleVector composite_mode(const InducedModule& mod, const ModuleVector& state,
                            long n, const ModuleVector& target) {
  if (mod.config().kind != VacuumKind::VacuumV)
    throw error(errc::unsupported, "composite modes live on the vacuum module");
  if (state.is_zero()) return {};
  if (!state.homogeneous_degree())
    throw error(errc::invalid_argument, "state must be homogeneous");
  state_parity(state, "state");
  ModuleVector out = composite_mode_impl(mod, state, n, target);
  if (out.truncated())
    throw error(errc::truncation_uncertain,
                "discarded terms could reach the requested degree; raise "
                "max_degree");
  return out;
}

ModuleVector commutator_residual(const InducedModule& mod,
                                 const ModuleVector& u, const ModuleVector& v,
                                 long m, long n, const ModuleVector& target) {
  if (u.is_zero() || v.is_zero()) return {};
  const int pu = state_parity(u, "u");
  const int pv = state_parity(v, "v");
  const HalfInt wu = u.homogeneous_degree().value_or(HalfInt::whole(0));
  const HalfInt wv = v.homogeneous_degree().value_or(HalfInt::whole(0));

  ModuleVector lhs = composite_mode(mod, u, m, composite_mode(mod, v, n, target));
  ModuleVector rhs_swap =
      composite_mode(mod, v, n, composite_mode(mod, u, m, target));
  if (pu == 1 && pv == 1) {
    lhs += rhs_swap;
  } else {
    lhs -= rhs_swap;
  }

  const long bound2 = wu.twice() + wv.twice() - 2;
  const long i_max = (bound2 >= 0) ? bound2 / 2 : -1;
  for (long i = 0; i <= i_max; ++i) {
    const Rational coeff = binomial(m, static_cast<unsigned>(i));
    if (coeff == 0) continue;
    ModuleVector ui_v = composite_mode(mod, u, i, v);
    if (ui_v.is_zero()) continue;
    ModuleVector piece = composite_mode(mod, ui_v, m + n - i, target);
    piece *= coeff;
    lhs -= piece;
  }
  return lhs;
}

ModuleVector skew_symmetry_residual(const InducedModule& mod,
                                    const ModuleVector& u,
                                    const ModuleVector& v, long n) {
  if (u.is_zero() || v.is_zero()) return {};
  const int pu = state_parity(u, "u");
  const int pv = state_parity(v, "v");
  const HalfInt wu = u.homogeneous_degree().value_or(HalfInt::whole(0));
  const HalfInt wv = v.homogeneous_degree().value_or(HalfInt::whole(0));

  ModuleVector residual = composite_mode(mod, u, n, v);

  const Rational outer_sign =
      ((pu == 1 && pv == 1) ? -1 : 1) * ((n % 2 == 0) ? -1 : 1);
  ModuleVector series = composite_mode(mod, v, n, u);
  Rational inv_factorial(1);
  const long bound2 = wu.twice() + wv.twice() - 2 * n - 2;
  const long i_max = (bound2 >= 0) ? bound2 / 2 : -1;
  for (long i = 1; i <= i_max; ++i) {
    inv_factorial /= Rational(i);
    ModuleVector tail = composite_mode(mod, v, n + i, u);
    if (tail.is_zero()) continue;
    for (long k = 0; k < i; ++k) tail = mod.translation_D(tail);
    tail *= inv_factorial * ((i % 2 == 0) ? 1 : -1);
    series += tail;
  }
  series *= outer_sign;
  residual -= series;
  return residual;
}

namespace {

void require_identity(const InducedModule& mod) {
  if (!mod.datum().identity_a)
    throw error(errc::no_identity, "these checks need an identity element");
}

std::string witness2(const char* a, int i, const char* b, int j) {
  std::ostringstream s;
  s << a << i << "," << b << j;
  return s.str();
}

}  // namespace

VerifyReport verify_structure_identities(const InducedModule& mod,
                                         const StructureOptions& opt) {
  if (mod.config().kind != VacuumKind::VacuumV)
    throw error(errc::unsupported, "structure identities live on V(ell,0)");
  require_identity(mod);
  if (mod.config().max_degree < HalfInt::whole(4))
    throw error(errc::invalid_argument, "needs max_degree >= 4");

  const AlgebraDatum& d = mod.datum();
  const Rational ell = mod.config().ell;
  const RatVec omega = d.omega();
  const HalfInt D = mod.config().max_degree;
  VerifyReport report;
  auto push = [&report](const std::string& id, std::string witness,
                        ModuleVector residual) {
    report.checks.push_back({id, std::move(witness), std::move(residual)});
  };

  auto a_state = [&](int i) { return state_of(mod, Parity::Even, i); };
  auto u_state = [&](int p) { return state_of(mod, Parity::Odd, p); };
  auto D1 = [&](const ModuleVector& v) { return mod.translation_D(v); };
  auto mode_a = [&](int i, int m, const ModuleVector& v) {
    return mod.apply_mode(ModeSymbol{Parity::Even, i, m}, v);
  };
  auto mode_u = [&](int p, int m, const ModuleVector& v) {
    return mod.apply_mode(ModeSymbol{Parity::Odd, p, m}, v);
  };
  auto L = [&](int m, const ModuleVector& v) {
    return mod.apply_loop(even_mode_of(omega, m + 1), v);
  };

  // a_0 v = 2/3 D a_1 v   and   v_0 a = 1/3 D v_1 a
  for (int i = 0; i < d.dim_a; ++i)
    for (int p = 0; p < d.dim_u; ++p) {
      ModuleVector r = mode_a(i, 0, u_state(p));
      ModuleVector rhs = D1(mode_a(i, 1, u_state(p)));
      rhs *= rational_of(2, 3);
      r -= rhs;
      push("a0_on_odd", witness2("a", i, "u", p), std::move(r));

      ModuleVector r2 = mode_u(p, 0, a_state(i));
      ModuleVector rhs2 = D1(mode_u(p, 1, a_state(i)));
      rhs2 *= rational_of(1, 3);
      r2 -= rhs2;
      push("odd0_on_even", witness2("u", p, "a", i), std::move(r2));
    }

  // [L(1), x_n] = (2 - n) x_{n+1} resp. (1 - n) x_{n+1} on sampled states.
  std::vector<ModuleVector> samples;
  samples.push_back(mod.lowest_weight_vector());
  for (long t = 1; t <= opt.state_cap.twice(); ++t)
    for (const auto& m : mod.basis(HalfInt::from_twice(t)))
      samples.push_back(ModuleVector::monomial(m));

  for (std::size_t w = 0; w < samples.size(); ++w) {
    const HalfInt dw = max_degree_of(samples[w]);
    for (int n = -opt.mode_window - 1; n <= opt.mode_window + 1; ++n) {
      // margins: a_n raises by at most 1-n, L(1) lowers by 1
      if (dw.twice() + std::max(0L, 2L * (1 - n)) > D.twice()) continue;
      for (int i = 0; i < d.dim_a; ++i) {
        ModuleVector lhs = L(1, mode_a(i, n, samples[w]));
        lhs -= mode_a(i, n, L(1, samples[w]));
        ModuleVector rhs = mode_a(i, n + 1, samples[w]);
        rhs *= Rational(2 - n);
        lhs -= rhs;
        push("l1_bracket_even", witness2("a", i, "w", static_cast<int>(w)),
             std::move(lhs));
      }
      if (dw.twice() + std::max(0L, 1 - 2L * n) > D.twice()) continue;
      for (int p = 0; p < d.dim_u; ++p) {
        ModuleVector lhs = L(1, mode_u(p, n, samples[w]));
        lhs -= mode_u(p, n, L(1, samples[w]));
        ModuleVector rhs = mode_u(p, n + 1, samples[w]);
        rhs *= Rational(1 - n);
        lhs -= rhs;
        push("l1_bracket_odd", witness2("u", p, "w", static_cast<int>(w)),
             std::move(lhs));
      }
    }
  }

  // compatibility families read inside the module
  const Rational four_thirds = rational_of(4, 3);
  for (int i = 0; i < d.dim_a; ++i)
    for (int p = 0; p < d.dim_u; ++p)
      for (int q = 0; q < d.dim_u; ++q) {
        ModuleVector au = mode_a(i, 1, u_state(p));
        au *= four_thirds;
        ModuleVector av = mode_a(i, 1, u_state(q));
        av *= four_thirds;

        // <au, v> = <u, av>
        ModuleVector r = composite_mode(mod, au, 2, u_state(q));
        r -= composite_mode(mod, u_state(p), 2, av);
        push("compat_form", witness2("a", i, "u", p) + ",u" + std::to_string(q),
             std::move(r));

        // <au, v> = 4/3 <a, u o v>
        ModuleVector uv = composite_mode(mod, u_state(p), 0, u_state(q));
        ModuleVector r2 = composite_mode(mod, au, 2, u_state(q));
        ModuleVector rhs2 = composite_mode(mod, a_state(i), 3, uv);
        rhs2 *= four_thirds;
        r2 -= rhs2;
        push("compat_form", witness2("a", i, "u", p) + ",u" + std::to_string(q) + ",circ",
             std::move(r2));

        // (au, v) = a(u, v) = (u, av) via zero modes
        ModuleVector lhs3 = composite_mode(mod, au, 0, u_state(q));
        ModuleVector mid3 = composite_mode(mod, a_state(i), 1, uv);
        ModuleVector rhs3 = composite_mode(mod, u_state(p), 0, av);
        ModuleVector r3a = lhs3 - mid3;
        ModuleVector r3b = lhs3 - rhs3;
        push("compat_circ", witness2("a", i, "u", p) + ",u" + std::to_string(q),
             std::move(r3a));
        push("compat_circ",
             witness2("a", i, "u", p) + ",u" + std::to_string(q) + ",sym",
             std::move(r3b));
      }

  // mode bracket families on sampled states
  for (std::size_t w = 0; w < samples.size(); ++w) {
    const HalfInt dw = max_degree_of(samples[w]);
    for (int m = -opt.mode_window; m <= opt.mode_window; ++m)
      for (int n = -opt.mode_window; n <= opt.mode_window; ++n) {
        const long raise_even_m = std::max(0L, 2L * (1 - m));
        const long raise_even_n = std::max(0L, 2L * (1 - n));
        const long raise_odd_m = std::max(0L, 1 - 2L * m);
        const long raise_odd_n = std::max(0L, 1 - 2L * n);

        if (dw.twice() + raise_even_n + raise_even_m <= D.twice()) {
          for (int i = 0; i < d.dim_a; ++i)
            for (int j = 0; j < d.dim_a; ++j) {
              ModuleVector lhs = mode_a(i, m, mode_a(j, n, samples[w]));
              lhs -= mode_a(j, n, mode_a(i, m, samples[w]));
              ModuleVector a1b = mode_a(i, 1, a_state(j));
              ModuleVector rhs =
                  composite_mode(mod, a1b, m + n - 1, samples[w]);
              rhs *= rational_of(m - n, 2);
              lhs -= rhs;
              if (m + n == 2) {
                ModuleVector central = samples[w];
                central *= binomial(m, 3) * ell * d.form_a[i][j];
                lhs -= central;
              }
              push("bracket_even",
                   witness2("a", i, "a", j) + ",m" + std::to_string(m) + ",n" +
                       std::to_string(n),
                   std::move(lhs));
            }
        }

        if (dw.twice() + raise_odd_n + raise_even_m <= D.twice()) {
          for (int i = 0; i < d.dim_a; ++i)
            for (int p = 0; p < d.dim_u; ++p) {
              ModuleVector lhs = mode_a(i, m, mode_u(p, n, samples[w]));
              lhs -= mode_u(p, n, mode_a(i, m, samples[w]));
              ModuleVector a1u = mode_a(i, 1, u_state(p));
              ModuleVector rhs =
                  composite_mode(mod, a1u, m + n - 1, samples[w]);
              rhs *= rational_of(m - 2 * n, 3);
              lhs -= rhs;
              push("bracket_mixed",
                   witness2("a", i, "u", p) + ",m" + std::to_string(m) + ",n" +
                       std::to_string(n),
                   std::move(lhs));
            }
        }

        if (dw.twice() + raise_odd_n + raise_odd_m <= D.twice()) {
          for (int p = 0; p < d.dim_u; ++p)
            for (int q = 0; q < d.dim_u; ++q) {
              ModuleVector lhs = mode_u(p, m, mode_u(q, n, samples[w]));
              lhs += mode_u(q, n, mode_u(p, m, samples[w]));
              ModuleVector u0v =
                  composite_mode(mod, u_state(p), 0, u_state(q));
              ModuleVector rhs = composite_mode(mod, u0v, m + n, samples[w]);
              lhs -= rhs;
              if (m + n == 1) {
                ModuleVector central = samples[w];
                central *= rational_of(static_cast<long>(m) * (m - 1), 2) *
                           ell * d.form_u[p][q];
                lhs -= central;
              }
              push("bracket_odd",
                   witness2("u", p, "u", q) + ",m" + std::to_string(m) + ",n" +
                       std::to_string(n),
                   std::move(lhs));
            }
        }
      }
  }

  // a_0 b = 1/2 D(ab) and a_0 b = 1/2 D(a_1 b)
  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_a; ++j) {
      ModuleVector lhs = mode_a(i, 0, a_state(j));
      ModuleVector ab_state;
      const RatVec ab = d.mul_a[i][j];
      for (int k = 0; k < d.dim_a; ++k) {
        ModuleVector part = a_state(k);
        part *= ab[k];
        ab_state += part;
      }
      ModuleVector rhs = D1(ab_state);
      rhs *= rational_of(1, 2);
      ModuleVector r = lhs - rhs;
      push("zero_mode_half_derivative", witness2("a", i, "a", j), std::move(r));

      ModuleVector rhs2 = D1(mode_a(i, 1, a_state(j)));
      rhs2 *= rational_of(1, 2);
      ModuleVector r2 = lhs - rhs2;
      push("zero_mode_vs_first", witness2("a", i, "a", j), std::move(r2));
    }

  // u_2 ( v_{-1} w - 1/2 D v_0 w ) = ell ( <u,v> w - <u,w> v )
  for (int p = 0; p < d.dim_u; ++p)
    for (int q = 0; q < d.dim_u; ++q)
      for (int r = 0; r < d.dim_u; ++r) {
        ModuleVector inner = mode_u(q, -1, u_state(r));
        ModuleVector corr = D1(mode_u(q, 0, u_state(r)));
        corr *= rational_of(1, 2);
        inner -= corr;
        ModuleVector lhs = mode_u(p, 2, inner);

        ModuleVector rhs = u_state(r);
        rhs *= ell * d.form_u[p][q];
        ModuleVector rhs2 = u_state(q);
        rhs2 *= ell * d.form_u[p][r];
        rhs -= rhs2;
        lhs -= rhs;
        push("odd_exchange",
             witness2("u", p, "u", q) + ",u" + std::to_string(r),
             std::move(lhs));
      }

  return report;
}

VerifyReport verify_commutator_skew_grids(const InducedModule& mod, int window,
                                          HalfInt state_cap) {
  if (mod.config().kind != VacuumKind::VacuumV)
    throw error(errc::unsupported, "composite-mode grids live on V(ell,0)");
  require_identity(mod);
  const AlgebraDatum& d = mod.datum();
  const HalfInt D = mod.config().max_degree;
  VerifyReport report;

  std::vector<ModuleVector> gens;
  std::vector<std::string> gen_names;
  for (int i = 0; i < d.dim_a; ++i) {
    gens.push_back(state_of(mod, Parity::Even, i));
    gen_names.push_back("a" + std::to_string(i));
  }
  for (int p = 0; p < d.dim_u; ++p) {
    gens.push_back(state_of(mod, Parity::Odd, p));
    gen_names.push_back("u" + std::to_string(p));
  }

  std::vector<ModuleVector> targets;
  targets.push_back(mod.lowest_weight_vector());
  for (long t = 1; t <= state_cap.twice(); ++t)
    for (const auto& m : mod.basis(HalfInt::from_twice(t)))
      targets.push_back(ModuleVector::monomial(m));

  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      const HalfInt wa = *gens[a].homogeneous_degree();
      const HalfInt wb = *gens[b].homogeneous_degree();

      // skew symmetry: margins bounded by the derivation powers
      for (long n = -window - 1; n <= window + 1; ++n) {
        if (wa.twice() + wb.twice() - 2 * n - 2 > D.twice()) continue;
        ModuleVector r = skew_symmetry_residual(mod, gens[a], gens[b], n);
        report.checks.push_back({"skew_symmetry",
                                 gen_names[a] + "," + gen_names[b] + ",n" +
                                     std::to_string(n),
                                 std::move(r)});
      }

      // commutator formula on sampled targets
      for (long m = -window; m <= window; ++m)
        for (long n = -window; n <= window; ++n)
          for (std::size_t w = 0; w < targets.size(); ++w) {
            const HalfInt dt = max_degree_of(targets[w]);
            const long raise_a = std::max(0L, wa.twice() - 2 * m - 2);
            const long raise_b = std::max(0L, wb.twice() - 2 * n - 2);
            if (dt.twice() + raise_a + raise_b + 4 > D.twice()) continue;
            ModuleVector r = commutator_residual(mod, gens[a], gens[b], m, n,
                                                 targets[w]);
            report.checks.push_back(
                {"commutator_formula",
                 gen_names[a] + "," + gen_names[b] + ",m" + std::to_string(m) +
                     ",n" + std::to_string(n) + ",w" + std::to_string(w),
                 std::move(r)});
          }
    }
  return report;
}

PSubspaceDims p_subspace_dim(const InducedModule& mod) {
  if (mod.config().kind != VacuumKind::VacuumV)
    throw error(errc::unsupported, "the degree-3 split lives on V(ell,0)");
  if (mod.config().max_degree < HalfInt::whole(3))
    throw error(errc::invalid_argument, "needs max_degree >= 3");

  const AlgebraDatum& d = mod.datum();
  const HalfInt three = HalfInt::whole(3);
  PSubspaceDims out;
  out.dim_degree3 = mod.graded_dimension(three);

  std::vector<RatVec> l_rows;
  for (int i = 0; i < d.dim_a; ++i) {
    ModuleVector v = mod.translation_D(state_of(mod, Parity::Even, i));
    if (!v.is_zero()) l_rows.push_back(mod.coordinates(v, three));
  }
  std::vector<RatVec> p_rows;
  for (int p = 0; p < d.dim_u; ++p)
    for (int q = 0; q < d.dim_u; ++q) {
      ModuleVector uq = state_of(mod, Parity::Odd, q);
      ModuleVector v =
          mod.apply_mode(ModeSymbol{Parity::Odd, p, -1}, uq);
      ModuleVector corr = mod.translation_D(
          mod.apply_mode(ModeSymbol{Parity::Odd, p, 0}, uq));
      corr *= rational_of(1, 2);
      v -= corr;
      if (!v.is_zero()) p_rows.push_back(mod.coordinates(v, three));
    }

  const std::size_t n3 = static_cast<std::size_t>(out.dim_degree3);
  out.dim_l1v2 = static_cast<long>(rank(RatMat(l_rows.begin(), l_rows.end())));
  out.dim_p = static_cast<long>(rank(RatMat(p_rows.begin(), p_rows.end())));
  RatMat both = l_rows;
  both.insert(both.end(), p_rows.begin(), p_rows.end());
  for (auto& r : both) r.resize(n3, Rational(0));
  const long joint = static_cast<long>(rank(std::move(both)));
  out.direct_sum =
      joint == out.dim_p + out.dim_l1v2 && joint == out.dim_degree3;
  return out;
}

VerifyReport verify_virasoro(const InducedModule& mod, int window,
                             std::optional<HalfInt> state_cap) {
  require_identity(mod);
  const AlgebraDatum& d = mod.datum();
  const RatVec omega = d.omega();
  const Rational ell = mod.config().ell;
  const HalfInt D = mod.config().max_degree;
  const HalfInt cap = state_cap.value_or(D);
  VerifyReport report;

  auto L = [&](int m, const ModuleVector& v) {
    return mod.apply_loop(even_mode_of(omega, m + 1), v);
  };
  const Rational lambda_omega =
      mod.config().kind == VacuumKind::VermaM ? mod.lambda_of(omega)
                                              : Rational(0);

  std::vector<ModuleVector> states;
  std::vector<HalfInt> state_deg;
  for (long t = 0; t <= std::min(cap.twice(), D.twice()); ++t) {
    const HalfInt h = HalfInt::from_twice(t);
    for (const auto& m : mod.basis(h)) {
      states.push_back(ModuleVector::monomial(m));
      state_deg.push_back(h);
    }
  }

  auto fits = [&](HalfInt dw, long raise_first2, long raise_total2) {
    return dw.twice() + std::max(raise_first2, raise_total2) <= D.twice() &&
           dw.twice() + raise_total2 >= 0;
  };

  for (std::size_t w = 0; w < states.size(); ++w) {
    const HalfInt dw = state_deg[w];

    // L(0) grading and L(-1) = D
    {
      ModuleVector lhs = L(0, states[w]);
      ModuleVector rhs = states[w];
      rhs *= rational_of(dw.twice(), 2) + lambda_omega;
      lhs -= rhs;
      report.checks.push_back(
          {"l0_grading", "w" + std::to_string(w), std::move(lhs)});
    }
    if (mod.config().kind == VacuumKind::VacuumV &&
        dw + HalfInt::whole(1) <= D) {
      ModuleVector lhs = L(-1, states[w]);
      lhs -= mod.translation_D(states[w]);
      report.checks.push_back(
          {"lminus1_translation", "w" + std::to_string(w), std::move(lhs)});
    }

    for (int m = -window; m <= window; ++m)
      for (int n = -window; n <= window; ++n) {
        const long rl_m = std::max(0L, -2L * m);  // L(m) raises degree by -m
        const long rl_n = std::max(0L, -2L * n);

        if (fits(dw, rl_n, rl_n + rl_m)) {
          ModuleVector lhs = L(m, L(n, states[w]));
          lhs -= L(n, L(m, states[w]));
          ModuleVector rhs = L(m + n, states[w]);
          rhs *= Rational(m - n);
          lhs -= rhs;
          if (m + n == 0) {
            ModuleVector central = states[w];
            central *= rational_of(static_cast<long>(m) * m * m - m, 12) * ell;
            lhs -= central;
          }
          report.checks.push_back({"virasoro",
                                   "m" + std::to_string(m) + ",n" +
                                       std::to_string(n) + ",w" +
                                       std::to_string(w),
                                   std::move(lhs)});
        }

        const long ra_n = std::max(0L, 2L * (1 - n));
        if (fits(dw, ra_n, ra_n + rl_m) && fits(dw, rl_m, rl_m + ra_n)) {
          for (int i = 0; i < d.dim_a; ++i) {
            ModuleVector lhs =
                L(m, mod.apply_mode(ModeSymbol{Parity::Even, i, n}, states[w]));
            lhs -= mod.apply_mode(ModeSymbol{Parity::Even, i, n},
                                  L(m, states[w]));
            ModuleVector rhs = mod.apply_mode(
                ModeSymbol{Parity::Even, i, m + n}, states[w]);
            rhs *= Rational(m + 1 - n);
            lhs -= rhs;
            if (m + n == 1) {
              RatVec ei(static_cast<std::size_t>(d.dim_a), Rational(0));
              ei[i] = 1;
              ModuleVector central = states[w];
              central *= rational_of(static_cast<long>(m) * m * m - m, 6) *
                         d.pair_a(omega, ei) * ell;
              lhs -= central;
            }
            report.checks.push_back({"virasoro_even",
                                     "a" + std::to_string(i) + ",m" +
                                         std::to_string(m) + ",n" +
                                         std::to_string(n) + ",w" +
                                         std::to_string(w),
                                     std::move(lhs)});
          }
        }

        const long ru_n = std::max(0L, 1 - 2L * n);
        if (fits(dw, ru_n, ru_n + rl_m) && fits(dw, rl_m, rl_m + ru_n)) {
          for (int p = 0; p < d.dim_u; ++p) {
            ModuleVector lhs =
                L(m, mod.apply_mode(ModeSymbol{Parity::Odd, p, n}, states[w]));
            lhs -= mod.apply_mode(ModeSymbol{Parity::Odd, p, n},
                                  L(m, states[w]));
            ModuleVector rhs =
                mod.apply_mode(ModeSymbol{Parity::Odd, p, m + n}, states[w]);
            rhs *= rational_of(m + 1 - 2L * n, 2);
            lhs -= rhs;
            report.checks.push_back({"virasoro_odd",
                                     "u" + std::to_string(p) + ",m" +
                                         std::to_string(m) + ",n" +
                                         std::to_string(n) + ",w" +
                                         std::to_string(w),
                                     std::move(lhs)});
          }
        }
      }
  }
  return report;
}

}  // namespace superloop
