#include "superloop/datum.hpp"

#include "superloop/error.hpp"
#include "superloop/linalg.hpp"

namespace superloop {

namespace {

RatVec zero_vec(int n) { return RatVec(static_cast<std::size_t>(n), Rational(0)); }

void axpy(RatVec& acc, const Rational& c, const RatVec& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += c * v[k];
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

RatVec AlgebraDatum::product_a(int i, int j) const { return mul_a[i][j]; }
RatVec AlgebraDatum::action(int i, int p) const { return act[i][p]; }
RatVec AlgebraDatum::circle(int p, int q) const { return circ[p][q]; }

RatVec AlgebraDatum::product_a(const RatVec& x, const RatVec& y) const {
  RatVec out = zero_vec(dim_a);
  for (int i = 0; i < dim_a; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_a; ++j) {
      if (y[j] == 0) continue;
      axpy(out, x[i] * y[j], mul_a[i][j]);
    }
  }
  return out;
}

RatVec AlgebraDatum::action(const RatVec& a, const RatVec& u) const {
  RatVec out = zero_vec(dim_u);
  for (int i = 0; i < dim_a; ++i) {
    if (a[i] == 0) continue;
    for (int p = 0; p < dim_u; ++p) {
      if (u[p] == 0) continue;
      axpy(out, a[i] * u[p], act[i][p]);
    }
  }
  return out;
}

RatVec AlgebraDatum::circle(const RatVec& u, const RatVec& v) const {
  RatVec out = zero_vec(dim_a);
  for (int p = 0; p < dim_u; ++p) {
    if (u[p] == 0) continue;
    for (int q = 0; q < dim_u; ++q) {
      if (v[q] == 0) continue;
      axpy(out, u[p] * v[q], circ[p][q]);
    }
  }
  return out;
}

Rational AlgebraDatum::pair_a(const RatVec& x, const RatVec& y) const {
  Rational out(0);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j) out += x[i] * form_a[i][j] * y[j];
  return out;
}

Rational AlgebraDatum::pair_u(const RatVec& u, const RatVec& v) const {
  Rational out(0);
  for (int p = 0; p < dim_u; ++p)
    for (int q = 0; q < dim_u; ++q) out += u[p] * form_u[p][q] * v[q];
  return out;
}

RatVec AlgebraDatum::omega() const {
  if (!identity_a)
    throw error(errc::no_identity, "datum has no identity element");
  RatVec w = *identity_a;
  for (auto& c : w) c *= 2;
  return w;
}

void AlgebraDatum::check_shapes() const {
  const auto na = static_cast<std::size_t>(dim_a);
  const auto nu = static_cast<std::size_t>(dim_u);
  auto bad = [](const std::string& what) {
    throw error(errc::dimension_mismatch, what);
  };
  if (dim_a <= 0 || dim_u <= 0) bad("dimensions must be positive");

  auto check_t3 = [&](const RatTensor3& t, std::size_t d1, std::size_t d2,
                      std::size_t d3, const char* name) {
    if (t.size() != d1) bad(name);
    for (const auto& m : t) {
      if (m.size() != d2) bad(name);
      for (const auto& r : m)
        if (r.size() != d3) bad(name);
    }
  };
  auto check_mat = [&](const RatMat& m, std::size_t d1, std::size_t d2,
                       const char* name) {
    if (m.size() != d1) bad(name);
    for (const auto& r : m)
      if (r.size() != d2) bad(name);
  };
  check_t3(mul_a, na, na, na, "mul_a");
  check_mat(form_a, na, na, "form_a");
  check_t3(act, na, nu, nu, "act");
  check_t3(circ, nu, nu, na, "circ");
  check_mat(form_u, nu, nu, "form_u");
  if (identity_a) {
    if (identity_a->size() != na) bad("identity_a");
    for (int j = 0; j < dim_a; ++j) {
      RatVec ej = zero_vec(dim_a);
      ej[j] = 1;
      if (product_a(*identity_a, ej) != ej)
        throw error(errc::dimension_mismatch,
                    "identity_a does not act as identity on A");
    }
    for (int p = 0; p < dim_u; ++p) {
      RatVec fp = zero_vec(dim_u);
      fp[p] = 1;
      if (action(*identity_a, fp) != fp)
        throw error(errc::dimension_mismatch,
                    "identity_a does not act as identity on U");
    }
  }
}

const char* condition_name(datum_condition c) {
  switch (c) {
    case datum_condition::comm_a: return "COMM_A";
    case datum_condition::assoc_a: return "ASSOC_A";
    case datum_condition::form_a_sym: return "FORM_A_SYM";
    case datum_condition::form_a_assoc: return "FORM_A_ASSOC";
    case datum_condition::module_axiom: return "MODULE_AXIOM";
    case datum_condition::form_u_sym: return "FORM_U_SYM";
    case datum_condition::circ_sym: return "CIRC_SYM";
    case datum_condition::cond_iii_form: return "COND_III_FORM";
    case datum_condition::cond_iii_circ_action: return "COND_III_CIRC_ACTION";
    case datum_condition::cond_iii_circ_module: return "COND_III_CIRC_MODULE";
  }
  return "?";
}

DatumReport verify_datum(const AlgebraDatum& d) {
  d.check_shapes();
  DatumReport report;
  auto add = [&report](datum_condition c, std::vector<int> w, RatVec lhs,
                       RatVec rhs) {
    report.violations.push_back({c, std::move(w), std::move(lhs), std::move(rhs)});
  };
  auto basis_a = [&](int i) {
    RatVec v = zero_vec(d.dim_a);
    v[i] = 1;
    return v;
  };
  auto basis_u = [&](int p) {
    RatVec v = zero_vec(d.dim_u);
    v[p] = 1;
    return v;
  };

  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_a; ++j) {
      if (d.mul_a[i][j] != d.mul_a[j][i])
        add(datum_condition::comm_a, {i, j}, d.mul_a[i][j], d.mul_a[j][i]);
      if (d.form_a[i][j] != d.form_a[j][i])
        add(datum_condition::form_a_sym, {i, j}, {d.form_a[i][j]},
            {d.form_a[j][i]});
    }

  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_a; ++j)
      for (int k = 0; k < d.dim_a; ++k) {
        const RatVec lhs = d.product_a(d.mul_a[i][j], basis_a(k));
        const RatVec rhs = d.product_a(basis_a(i), d.mul_a[j][k]);
        if (lhs != rhs) add(datum_condition::assoc_a, {i, j, k}, lhs, rhs);

        const Rational fl = d.pair_a(d.mul_a[i][j], basis_a(k));
        const Rational fr = d.pair_a(basis_a(i), d.mul_a[j][k]);
        if (fl != fr) add(datum_condition::form_a_assoc, {i, j, k}, {fl}, {fr});
      }

  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_a; ++j)
      for (int p = 0; p < d.dim_u; ++p) {
        const RatVec lhs = d.action(basis_a(i), d.act[j][p]);
        const RatVec rhs = d.action(d.mul_a[i][j], basis_u(p));
        if (lhs != rhs) add(datum_condition::module_axiom, {i, j, p}, lhs, rhs);
      }

  for (int p = 0; p < d.dim_u; ++p)
    for (int q = 0; q < d.dim_u; ++q) {
      if (d.form_u[p][q] != d.form_u[q][p])
        add(datum_condition::form_u_sym, {p, q}, {d.form_u[p][q]},
            {d.form_u[q][p]});
      if (d.circ[p][q] != d.circ[q][p])
        add(datum_condition::circ_sym, {p, q}, d.circ[p][q], d.circ[q][p]);
    }

  const Rational four_thirds = rational_of(4, 3);
  for (int i = 0; i < d.dim_a; ++i)
    for (int p = 0; p < d.dim_u; ++p)
      for (int q = 0; q < d.dim_u; ++q) {
        // <a.u, v> = <u, a.v> = 4/3 <a, u o v>
        const Rational au_v = d.pair_u(d.act[i][p], basis_u(q));
        const Rational u_av = d.pair_u(basis_u(p), d.act[i][q]);
        const Rational a_uv = four_thirds * d.pair_a(basis_a(i), d.circ[p][q]);
        if (au_v != u_av)
          add(datum_condition::cond_iii_form, {i, p, q}, {au_v}, {u_av});
        if (au_v != a_uv)
          add(datum_condition::cond_iii_form, {i, p, q}, {au_v}, {a_uv});

        // a(u o v) = (a.u) o v = u o (a.v)
        const RatVec a_circ = d.product_a(basis_a(i), d.circ[p][q]);
        const RatVec au_circ = d.circle(d.act[i][p], basis_u(q));
        const RatVec u_circ_av = d.circle(basis_u(p), d.act[i][q]);
        if (a_circ != au_circ)
          add(datum_condition::cond_iii_circ_action, {i, p, q}, a_circ, au_circ);
        if (a_circ != u_circ_av)
          add(datum_condition::cond_iii_circ_action, {i, p, q}, a_circ,
              u_circ_av);
      }

  for (int p = 0; p < d.dim_u; ++p)
    for (int q = 0; q < d.dim_u; ++q)
      for (int r = 0; r < d.dim_u; ++r) {
        // (u o v).w = (v o w).u = (w o u).v
        const RatVec uv_w = d.action(d.circ[p][q], basis_u(r));
        const RatVec vw_u = d.action(d.circ[q][r], basis_u(p));
        const RatVec wu_v = d.action(d.circ[r][p], basis_u(q));
        if (uv_w != vw_u)
          add(datum_condition::cond_iii_circ_module, {p, q, r}, uv_w, vw_u);
        if (uv_w != wu_v)
          add(datum_condition::cond_iii_circ_module, {p, q, r}, uv_w, wu_v);
      }

  report.rank_form_a = rank(d.form_a);
  report.rank_form_u = rank(d.form_u);
  return report;
}

std::optional<RatVec> find_identity(AlgebraDatum& d) {
  // Unknown e in A with e*e_j = e_j for all j and e.f_p = f_p for all p.
  RatMat rows;
  RatVec rhs;
  for (int j = 0; j < d.dim_a; ++j)
    for (int k = 0; k < d.dim_a; ++k) {
      RatVec row(static_cast<std::size_t>(d.dim_a), Rational(0));
      for (int i = 0; i < d.dim_a; ++i) row[i] = d.mul_a[i][j][k];
      rows.push_back(std::move(row));
      rhs.push_back(j == k ? Rational(1) : Rational(0));
    }
  for (int p = 0; p < d.dim_u; ++p)
    for (int q = 0; q < d.dim_u; ++q) {
      RatVec row(static_cast<std::size_t>(d.dim_a), Rational(0));
      for (int i = 0; i < d.dim_a; ++i) row[i] = d.act[i][p][q];
      rows.push_back(std::move(row));
      rhs.push_back(p == q ? Rational(1) : Rational(0));
    }
  auto e = solve(std::move(rows), std::move(rhs));
  if (!e) return std::nullopt;
  if (is_zero(*e)) return std::nullopt;
  d.identity_a = *e;
  return e;
}

bool conformal_normalization_check(const AlgebraDatum& d) {
  const RatVec w = d.omega();
  return d.pair_a(w, w) == rational_of(1, 2);
}

AlgebraDatum build_ns() {
  AlgebraDatum d;
  d.dim_a = 1;
  d.dim_u = 1;
  d.mul_a = {{{Rational(2)}}};
  d.form_a = {{rational_of(1, 2)}};
  d.act = {{{Rational(2)}}};
  d.circ = {{{Rational(2)}}};
  d.form_u = {{rational_of(2, 3)}};
  d.identity_a = RatVec{rational_of(1, 2)};
  return d;
}

AlgebraDatum build_trunc_poly(int n, const RatVec& f) {
  if (n < 0)
    throw error(errc::invalid_argument, "truncation order must be >= 0");
  if (f.size() != static_cast<std::size_t>(n) + 1)
    throw error(errc::dimension_mismatch,
                "functional must have n+1 coefficients");
  RatVec func = f;
  func[0] = rational_of(1, 8);  // forces <2*1, 2*1> = 4 f(1) = 1/2
  if (func[static_cast<std::size_t>(n)] == 0)
    throw error(errc::degenerate_pivot, "f(x^n) must be nonzero");

  const int dim = n + 1;
  AlgebraDatum d;
  d.dim_a = dim;
  d.dim_u = dim;
  auto zero3 = [dim] {
    return RatTensor3(dim, RatMat(dim, RatVec(dim, Rational(0))));
  };
  d.mul_a = zero3();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i + j < dim) d.mul_a[i][j][i + j] = 1;
  d.form_a.assign(dim, RatVec(dim, Rational(0)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (i + j < dim) d.form_a[i][j] = func[i + j];
  d.identity_a = RatVec(dim, Rational(0));
  (*d.identity_a)[0] = 1;

  AlgebraDatum full = build_ideal_module(d);
  return full;
}

AlgebraDatum build_ideal_module(const AlgebraDatum& a_datum) {
  AlgebraDatum d = a_datum;
  d.dim_u = d.dim_a;
  d.act = d.mul_a;
  d.circ = d.mul_a;
  const Rational three_quarters = rational_of(3, 4);
  for (auto& m : d.circ)
    for (auto& r : m)
      for (auto& c : r) c *= three_quarters;
  d.form_u = d.form_a;
  return d;
}

}  // namespace superloop
