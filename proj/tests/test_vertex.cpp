#include <doctest.h>

#include "superloop/error.hpp"
#include "superloop/vertex.hpp"

using namespace superloop;

namespace {

ModuleConfig vacuum_config(AlgebraDatum d, Rational ell, HalfInt max_degree) {
  ModuleConfig cfg;
  cfg.datum = std::move(d);
  cfg.ell = std::move(ell);
  cfg.lambda.assign(cfg.datum.dim_a, Rational(0));
  cfg.kind = VacuumKind::VacuumV;
  cfg.max_degree = max_degree;
  return cfg;
}

ModeSymbol even(int idx, int mode) { return {Parity::Even, idx, mode}; }
ModeSymbol odd(int idx, int mode) { return {Parity::Odd, idx, mode}; }

ModuleVector gen_state(Parity kind, int idx) {
  return ModuleVector::monomial(PBWMonomial{{ModeSymbol{kind, idx, -1}}});
}

}  // namespace

TEST_CASE("vacuum state modes are the identity at n = -1") {
  InducedModule mod(vacuum_config(build_ns(), Rational(1), HalfInt::whole(6)));
  const ModuleVector one = mod.lowest_weight_vector();
  for (long t = 0; t <= 8; ++t)
    for (const auto& m : mod.basis(HalfInt::from_twice(t))) {
      const ModuleVector w = ModuleVector::monomial(m);
      for (long n = -3; n <= 3; ++n) {
        const ModuleVector got = composite_mode(mod, one, n, w);
        if (n == -1) {
          CHECK(got == w);
        } else {
          CHECK(got.is_zero());
        }
      }
    }
}

TEST_CASE("generator states reduce to the Lie-algebra modes") {
  InducedModule mod(vacuum_config(build_ns(), Rational(2), HalfInt::whole(7)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  const ModuleVector u = gen_state(Parity::Odd, 0);
  for (long t = 0; t <= 6; ++t)
    for (const auto& m : mod.basis(HalfInt::from_twice(t))) {
      const ModuleVector w = ModuleVector::monomial(m);
      for (long n = -3; n <= 3; ++n) {
        CHECK(composite_mode(mod, a, n, w) ==
              mod.apply_mode(even(0, static_cast<int>(n)), w));
        CHECK(composite_mode(mod, u, n, w) ==
              mod.apply_mode(odd(0, static_cast<int>(n)), w));
      }
    }
}

TEST_CASE("translated states obey (D v)_n = -n v_{n-1}") {
  // independent oracle for composite modes of two-symbol states
  const AlgebraDatum data[] = {build_ns(),
                               build_trunc_poly(1, {Rational(1), Rational(1)})};
  for (const auto& d : data) {
    InducedModule mod(vacuum_config(d, rational_of(5, 7), HalfInt::whole(8)));
    std::vector<ModuleVector> states;
    for (int i = 0; i < d.dim_a; ++i)
      states.push_back(gen_state(Parity::Even, i));
    for (int p = 0; p < d.dim_u; ++p)
      states.push_back(gen_state(Parity::Odd, p));
    // a second layer: one more creator gives genuine two-symbol states
    const std::size_t first_layer = states.size();
    for (std::size_t s = 0; s < first_layer; ++s)
      states.push_back(mod.apply_mode(even(0, -2), states[s]));

    const long cap = mod.config().max_degree.twice();
    for (const auto& v : states) {
      if (v.is_zero()) continue;
      const ModuleVector dv = mod.translation_D(v);
      const long wt = dv.homogeneous_degree()->twice();
      for (long t = 0; t <= 4; ++t)
        for (const auto& m : mod.basis(HalfInt::from_twice(t))) {
          const ModuleVector w = ModuleVector::monomial(m);
          for (long n = -2; n <= 3; ++n) {
            // margin: output degree plus straightening headroom
            if (t + wt - 2 * n - 2 > cap - 4) continue;
            ModuleVector lhs = composite_mode(mod, dv, n, w);
            ModuleVector rhs = composite_mode(mod, v, n - 1, w);
            rhs *= Rational(-n);
            CHECK(lhs == rhs);
          }
        }
    }
  }
}

TEST_CASE("frozen composite value: (D a)_2 applied to the even generator") {
  InducedModule mod(vacuum_config(build_ns(), Rational(1), HalfInt::whole(6)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  const ModuleVector da = mod.translation_D(a);  // a(-2) 1
  ModuleVector got = composite_mode(mod, da, 2, a);
  ModuleVector want = a;
  want *= Rational(-4);
  CHECK(got == want);
}

TEST_CASE("commutator formula residuals vanish") {
  InducedModule mod(vacuum_config(build_ns(), Rational(1), HalfInt::whole(9)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  const ModuleVector u = gen_state(Parity::Odd, 0);
  const ModuleVector one = mod.lowest_weight_vector();

  CHECK(commutator_residual(mod, a, a, 2, -1, u).is_zero());
  CHECK(commutator_residual(mod, a, u, 0, 0, one).is_zero());
  CHECK(commutator_residual(mod, one, u, 1, -1, a).is_zero());  // v1 = vacuum
  CHECK(commutator_residual(mod, u, u, -1, 0, u).is_zero());

  // composite left argument: a(-2) 1 = D a
  const ModuleVector da = mod.translation_D(a);
  CHECK(commutator_residual(mod, da, u, 1, -1, one).is_zero());
}

TEST_CASE("skew symmetry residuals vanish") {
  InducedModule mod(vacuum_config(build_ns(), Rational(1), HalfInt::whole(9)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  const ModuleVector u = gen_state(Parity::Odd, 0);
  const ModuleVector one = mod.lowest_weight_vector();

  CHECK(skew_symmetry_residual(mod, u, u, 0).is_zero());
  CHECK(skew_symmetry_residual(mod, a, a, 1).is_zero());
  CHECK(skew_symmetry_residual(mod, one, a, -1).is_zero());
  CHECK(skew_symmetry_residual(mod, a, u, 0).is_zero());
  CHECK(skew_symmetry_residual(mod, u, a, -2).is_zero());
}

TEST_CASE("grid verifiers are all-zero on valid data") {
  const AlgebraDatum data[] = {build_ns(),
                               build_trunc_poly(1, {Rational(1), Rational(1)})};
  for (const auto& d : data) {
    InducedModule mod(vacuum_config(d, rational_of(3, 2), HalfInt::whole(9)));
    const VerifyReport grids =
        verify_commutator_skew_grids(mod, 2, HalfInt::whole(2));
    CHECK(grids.all_zero());
    CHECK(!grids.checks.empty());
  }
}

TEST_CASE("structure identities hold on valid data") {
  const AlgebraDatum data[] = {build_ns(),
                               build_trunc_poly(1, {Rational(1), Rational(1)})};
  for (const auto& d : data) {
    for (const Rational& ell : {Rational(0), Rational(1), rational_of(5, 7)}) {
      InducedModule mod(vacuum_config(d, ell, HalfInt::whole(9)));
      const VerifyReport r = verify_structure_identities(mod);
      CHECK(r.all_zero());
      CHECK(!r.checks.empty());
    }
  }
}

TEST_CASE("degree-3 splits as translations plus the odd-pair subspace") {
  SUBCASE("one odd dimension: the subspace collapses") {
    InducedModule mod(
        vacuum_config(build_ns(), Rational(1), HalfInt::whole(4)));
    const PSubspaceDims dims = p_subspace_dim(mod);
    CHECK(dims.dim_p == 0);
    CHECK(dims.dim_l1v2 == 1);
    CHECK(dims.dim_degree3 == 1);
    CHECK(dims.direct_sum);
  }
  SUBCASE("two odd dimensions with nondegenerate form: it does not") {
    const AlgebraDatum tp = build_trunc_poly(1, {Rational(1), Rational(1)});
    InducedModule mod(vacuum_config(tp, Rational(1), HalfInt::whole(4)));
    const PSubspaceDims dims = p_subspace_dim(mod);
    CHECK(dims.dim_p >= 1);
    CHECK(dims.dim_l1v2 == 2);
    CHECK(dims.dim_p + dims.dim_l1v2 == dims.dim_degree3);
    CHECK(dims.direct_sum);
  }
  SUBCASE("degenerate regression: all products zero") {
    AlgebraDatum z;
    z.dim_a = 1;
    z.dim_u = 2;
    z.mul_a.assign(1, RatMat(1, RatVec(1, Rational(0))));
    z.form_a.assign(1, RatVec(1, Rational(0)));
    z.act.assign(1, RatMat(2, RatVec(2, Rational(0))));
    z.circ.assign(2, RatMat(2, RatVec(1, Rational(0))));
    z.form_u.assign(2, RatVec(2, Rational(0)));
    REQUIRE(verify_datum(z).ok());
    InducedModule mod(vacuum_config(z, Rational(1), HalfInt::whole(4)));
    const PSubspaceDims dims = p_subspace_dim(mod);
    CHECK(dims.dim_p == 1);  // u0(-1)u1(-1) with no correction terms
    CHECK(dims.dim_l1v2 == 1);
    CHECK(dims.dim_degree3 == 2);
    CHECK(dims.direct_sum);
  }
}

TEST_CASE("conformal families close with central charge equal to the level") {
  const Rational ell = rational_of(3, 2);
  InducedModule mod(vacuum_config(build_ns(), ell, HalfInt::whole(9)));
  REQUIRE(conformal_normalization_check(mod.datum()));
  const VerifyReport r = verify_virasoro(mod, 3, HalfInt::whole(3));
  CHECK(r.all_zero());
  CHECK(!r.checks.empty());

  // [L(3), L(-3)] 1 = 6 L(0) 1 + 2 ell 1 = 2 ell 1
  const RatVec omega = mod.datum().omega();
  auto L = [&](int m, const ModuleVector& v) {
    LoopElement e;
    for (std::size_t i = 0; i < omega.size(); ++i)
      e.add_term(Parity::Even, static_cast<int>(i), m + 1, omega[i]);
    return mod.apply_loop(e, v);
  };
  const ModuleVector one = mod.lowest_weight_vector();
  ModuleVector got = L(3, L(-3, one));
  ModuleVector want = one;
  want *= Rational(2) * ell;
  CHECK(got == want);

  // [L(1), g-mode] matches the half-integer shift at n = 0
  const ModuleVector u = gen_state(Parity::Odd, 0);
  ModuleVector lhs = L(1, mod.apply_mode(odd(0, 0), u));
  lhs -= mod.apply_mode(odd(0, 0), L(1, u));
  CHECK(lhs == mod.apply_mode(odd(0, 1), u));  // (1+1-0)/2 = 1
}

TEST_CASE("virasoro families hold on the two-dimensional datum") {
  const AlgebraDatum tp = build_trunc_poly(1, {Rational(1), Rational(1)});
  InducedModule mod(vacuum_config(tp, Rational(2), HalfInt::whole(8)));
  const VerifyReport r = verify_virasoro(mod, 2, HalfInt::whole(2));
  CHECK(r.all_zero());
}

TEST_CASE("truncation uncertainty is reported, not silently wrong") {
  InducedModule tight(
      vacuum_config(build_ns(), Rational(1), HalfInt::whole(3)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  // a(-2) a at a creating mode forces intermediates beyond degree 3
  const ModuleVector da = tight.translation_D(a);
  CHECK_THROWS_AS(composite_mode(tight, da, -1, a), error);
}

TEST_CASE("mode-weight law for composite states") {
  InducedModule mod(vacuum_config(build_ns(), Rational(1), HalfInt::whole(8)));
  const ModuleVector a = gen_state(Parity::Even, 0);
  const ModuleVector da = mod.translation_D(a);  // weight 3
  for (long n = 0; n <= 5; ++n) {
    for (long t = 0; t <= 6; ++t) {
      for (const auto& m : mod.basis(HalfInt::from_twice(t))) {
        const ModuleVector w = ModuleVector::monomial(m);
        const ModuleVector out = composite_mode(mod, da, n, w);
        if (out.is_zero()) continue;
        CHECK(out.homogeneous_degree() ==
              HalfInt::from_twice(t) + HalfInt::whole(3) -
                  HalfInt::whole(n + 1));
      }
    }
  }
}
