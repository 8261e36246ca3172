#include "superloop/form.hpp"

#include <algorithm>
#include <sstream>

#include "superloop/error.hpp"

namespace superloop {

namespace {

ModeSymbol adjoint(const ModeSymbol& s) {
  return s.kind == Parity::Even
             ? ModeSymbol{Parity::Even, s.basis_index, 2 - s.mode}
             : ModeSymbol{Parity::Odd, s.basis_index, 1 - s.mode};
}

Rational empty_coeff(const ModuleVector& v) {
  auto it = v.entries().find(PBWMonomial{});
  return it == v.entries().end() ? Rational(0) : it->second;
}

Rational pair_word(const InducedModule& mod, const std::vector<ModeSymbol>& word,
                   ModuleVector y) {
  for (const auto& s : word) {
    if (y.is_zero()) return Rational(0);
    y = mod.apply_mode(adjoint(s), y);
  }
  return empty_coeff(y);
}

}  // namespace

Rational pairing(const InducedModule& mod, const ModuleVector& x,
                 const ModuleVector& y, bool strict) {
  if (strict) {
    const auto dx = x.homogeneous_degree();
    const auto dy = y.homogeneous_degree();
    if (dx && dy && *dx != *dy)
      throw error(errc::degree_mismatch, "pairing of degrees " + dx->str() +
                                             " and " + dy->str());
  }
  Rational out(0);
  for (const auto& [m, c] : x.entries())
    out += c * pair_word(mod, m.word, y);
  return out;
}

std::size_t GramMatrix::rank() const { return superloop::rank(entries); }

GramMatrix gram(const InducedModule& mod, HalfInt d) {
  GramMatrix g;
  g.degree = d;
  g.basis = mod.basis(d);
  const std::size_t n = g.basis.size();
  g.entries.assign(n, RatVec(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    // contract column j once, then read off all rows
    ModuleVector col = ModuleVector::monomial(g.basis[j]);
    for (std::size_t i = 0; i < n; ++i)
      g.entries[i][j] = pair_word(mod, g.basis[i].word, col);
  }
  return g;
}

RadicalBasis radical_basis(const InducedModule& mod, HalfInt d) {
  const GramMatrix g = gram(mod, d);
  RadicalBasis out;
  out.degree = d;
  for (const auto& coords : null_space(g.entries, g.basis.size())) {
    ModuleVector v;
    for (std::size_t i = 0; i < coords.size(); ++i)
      v.add(g.basis[i], coords[i]);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

RadicalBasis brute_force_radical(const InducedModule& mod, HalfInt d,
                                 const BruteForceOptions& opt) {
  const auto& monomials = mod.basis(d);
  const std::size_t n = monomials.size();
  RadicalBasis out;
  out.degree = d;
  if (n == 0) return out;

  const int ann_min = mod.creation_max() + 1;
  const HalfInt D = mod.config().max_degree;

  // Images of all basis monomials under the word applied so far.
  std::vector<ModuleVector> images;
  images.reserve(n);
  for (const auto& m : monomials) images.push_back(ModuleVector::monomial(m));

  RatMat rows;
  // Depth-first over normal-ordered annihilation words (non-decreasing
  // symbol order, odd symbols squarefree, running degree within [0, D]).
  auto dfs = [&](auto&& self, HalfInt degree, std::optional<ModeSymbol> last,
                 int zero_syms, std::vector<ModuleVector>& imgs) -> void {
    if (degree == HalfInt::whole(0)) {
      RatVec row(n, Rational(0));
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = empty_coeff(imgs[i]);
        nonzero |= row[i] != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
      return;
    }
    bool alive = false;
    for (const auto& v : imgs) alive |= !v.is_zero();
    if (!alive) return;

    // modes whose degree drop stays within the current degree; the
    // next-degree check below does the exact filtering
    const int hi = static_cast<int>(degree.floor()) + 2;
    for (int mode = ann_min; mode <= hi; ++mode) {
      for (int kind = 0; kind < 2; ++kind) {
        const Parity p = static_cast<Parity>(kind);
        const int dim =
            p == Parity::Even ? mod.datum().dim_a : mod.datum().dim_u;
        for (int idx = 0; idx < dim; ++idx) {
          const ModeSymbol s{p, idx, mode};
          const HalfInt sd = s.degree();
          const HalfInt next = degree + sd;
          if (next < HalfInt::whole(0) || next > D) continue;
          if (last) {
            if (s < *last) continue;
            if (s == *last && p == Parity::Odd) continue;
          }
          const bool preserves = sd == HalfInt::whole(0);
          if (preserves && zero_syms >= opt.max_degree_zero_symbols) continue;
          std::vector<ModuleVector> next_imgs;
          next_imgs.reserve(n);
          for (const auto& v : imgs) next_imgs.push_back(mod.apply_mode(s, v));
          self(self, next, s, zero_syms + (preserves ? 1 : 0), next_imgs);
        }
      }
    }
  };
  dfs(dfs, d, std::nullopt, 0, images);

  for (const auto& coords : null_space(rows, n)) {
    ModuleVector v;
    for (std::size_t i = 0; i < coords.size(); ++i)
      v.add(monomials[i], coords[i]);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

CharacterSeries character(const InducedModule& mod, HalfInt max_d) {
  if (max_d > mod.config().max_degree)
    throw error(errc::degree_out_of_range,
                "character degree beyond the truncation bound");
  CharacterSeries rows;
  for (long t = 0; t <= max_d.twice(); ++t) {
    const HalfInt d = HalfInt::from_twice(t);
    const long dim = mod.graded_dimension(d);
    const long rad = radical_basis(mod, d).dim();
    rows.push_back({d, dim, rad, dim - rad});
  }
  return rows;
}

std::vector<PBWMonomial> simple_basis_representatives(const InducedModule& mod,
                                                      HalfInt d) {
  GramMatrix g = gram(mod, d);
  RatMat work = g.entries;
  const auto pivots = rref(work);
  std::vector<PBWMonomial> out;
  out.reserve(pivots.size());
  for (auto p : pivots) out.push_back(g.basis[p]);
  return out;
}

ContragredientReport contragredient_check(const InducedModule& mod,
                                          std::optional<HalfInt> degree_cap) {
  if (mod.config().kind != VacuumKind::VermaM)
    throw error(errc::unsupported,
                "the contragredient check targets the Verma module");
  const AlgebraDatum& d = mod.datum();
  const HalfInt D = mod.config().max_degree;
  const HalfInt cap = degree_cap.value_or(D - HalfInt::whole(3));
  ContragredientReport report;
  report.adjoint_ok = true;
  report.lambda_ok = true;
  report.block_symmetry_ok = true;
  report.signed_symmetry_ok = true;
  auto fail = [&report](bool& flag, const std::string& what) {
    flag = false;
    report.failures.push_back(what);
  };

  // <a(n) x, y> = <x, a(2-n) y> on all compatible degree pairs
  for (int n = -2; n <= 4; ++n) {
    for (long tx = 0; tx <= cap.twice(); ++tx) {
      const HalfInt dx = HalfInt::from_twice(tx);
      const HalfInt dy = dx + HalfInt::whole(1 - n);
      if (dy < HalfInt::whole(0) || dy > cap) continue;
      if (dx + HalfInt::whole(std::max(0, 1 - n)) > D) continue;
      if (dy + HalfInt::whole(std::max(0, n - 1)) > D) continue;
      for (int i = 0; i < d.dim_a; ++i) {
        const ModeSymbol up{Parity::Even, i, n};
        const ModeSymbol down{Parity::Even, i, 2 - n};
        for (const auto& mx : mod.basis(dx))
          for (const auto& my : mod.basis(dy)) {
            const ModuleVector x = ModuleVector::monomial(mx);
            const ModuleVector y = ModuleVector::monomial(my);
            const Rational lhs = pairing(mod, mod.apply_mode(up, x), y);
            const Rational rhs = pairing(mod, x, mod.apply_mode(down, y));
            if (lhs != rhs) {
              std::ostringstream s;
              s << "adjoint a" << i << "(" << n << "): <" << mx.str() << ", "
                << my.str() << "> " << to_string(lhs) << " != "
                << to_string(rhs);
              fail(report.adjoint_ok, s.str());
            }
          }
      }
    }
  }

  // the form reproduces the a(1)-eigenvalues on the lowest-weight vector
  const ModuleVector lwv = mod.lowest_weight_vector();
  for (int i = 0; i < d.dim_a; ++i) {
    const ModeSymbol a1{Parity::Even, i, 1};
    const Rational want = mod.config().lambda[i];
    if (pairing(mod, mod.apply_mode(a1, lwv), lwv) != want ||
        pairing(mod, lwv, mod.apply_mode(a1, lwv)) != want)
      fail(report.lambda_ok, "lambda eigenvalue through the form, a" +
                                 std::to_string(i));
  }

  // Gram symmetry per odd-count class: equal counts mod 4 must be symmetric;
  // each (c, c') class must carry one consistent sign overall.
  for (long t = 0; t <= cap.twice(); ++t) {
    const HalfInt deg = HalfInt::from_twice(t);
    const GramMatrix g = gram(mod, deg);
    const std::size_t nb = g.basis.size();
    std::vector<int> odd(nb);
    for (std::size_t i = 0; i < nb; ++i) odd[i] = g.basis[i].odd_count();
    std::map<std::pair<int, int>, int> class_sign;  // +1 / -1, 0 undecided
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) {
        const Rational& a = g.entries[i][j];
        const Rational& b = g.entries[j][i];
        if ((odd[i] - odd[j]) % 4 == 0 && a != b)
          fail(report.block_symmetry_ok,
               "gram asymmetry at degree " + deg.str());
        if (a == 0 && b == 0) continue;
        int sign = 0;
        if (a == b) sign = 1;
        else if (a == -b) sign = -1;
        if (sign == 0) {
          fail(report.signed_symmetry_ok,
               "gram entries not sign-related at degree " + deg.str());
          continue;
        }
        auto key = std::minmax(odd[i], odd[j]);
        auto [it, inserted] =
            class_sign.emplace(std::pair<int, int>(key.first, key.second), sign);
        if (!inserted && it->second != sign)
          fail(report.signed_symmetry_ok,
               "inconsistent class sign at degree " + deg.str());
      }
  }
  return report;
}

std::vector<std::pair<Rational, long>> ell_scan(
    const ModuleConfig& base, HalfInt d, const std::vector<Rational>& ells) {
  std::vector<std::pair<Rational, long>> out;
  out.reserve(ells.size());
  for (const auto& ell : ells) {
    ModuleConfig cfg = base;
    cfg.ell = ell;
    InducedModule mod(cfg);
    out.emplace_back(ell, static_cast<long>(gram(mod, d).rank()));
  }
  return out;
}

}  // namespace superloop
