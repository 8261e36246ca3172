#include "superloop/loop.hpp"

#include "superloop/error.hpp"

namespace superloop {

HalfInt loop_degree(Parity kind, int mode) {
  return kind == Parity::Even ? HalfInt::from_twice(2 - 2 * mode)
                              : HalfInt::from_twice(1 - 2 * mode);
}

LoopElement LoopElement::a_term(int basis_index, int mode, Rational coeff) {
  LoopElement e;
  e.add_term(Parity::Even, basis_index, mode, coeff);
  return e;
}

LoopElement LoopElement::u_term(int basis_index, int mode, Rational coeff) {
  LoopElement e;
  e.add_term(Parity::Odd, basis_index, mode, coeff);
  return e;
}

LoopElement LoopElement::central(Rational coeff) {
  LoopElement e;
  e.k_coeff_ = std::move(coeff);
  return e;
}

void LoopElement::add_term(Parity kind, int basis_index, int mode,
                           const Rational& c) {
  if (c == 0) return;
  const Key key{static_cast<int>(kind), basis_index, mode};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [key, c] : o.terms_)
    add_term(static_cast<Parity>(std::get<0>(key)), std::get<1>(key),
             std::get<2>(key), c);
  k_coeff_ += o.k_coeff_;
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  for (const auto& [key, c] : o.terms_)
    add_term(static_cast<Parity>(std::get<0>(key)), std::get<1>(key),
             std::get<2>(key), -c);
  k_coeff_ -= o.k_coeff_;
  return *this;
}

LoopElement& LoopElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    k_coeff_ = 0;
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  k_coeff_ *= c;
  return *this;
}

LoopElement LoopElement::operator+(const LoopElement& o) const {
  LoopElement r = *this;
  r += o;
  return r;
}

LoopElement LoopElement::operator-(const LoopElement& o) const {
  LoopElement r = *this;
  r -= o;
  return r;
}

bool LoopElement::operator==(const LoopElement& o) const {
  return terms_ == o.terms_ && k_coeff_ == o.k_coeff_;
}

bool LoopElement::is_homogeneous() const {
  bool seen_even = k_coeff_ != 0;
  bool seen_odd = false;
  for (const auto& [key, c] : terms_) {
    (std::get<0>(key) == 0 ? seen_even : seen_odd) = true;
  }
  return !(seen_even && seen_odd);
}

Parity LoopElement::parity() const {
  for (const auto& [key, c] : terms_)
    return static_cast<Parity>(std::get<0>(key));
  return Parity::Even;
}

std::vector<LoopTerm> LoopElement::term_list() const {
  std::vector<LoopTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_)
    out.push_back({static_cast<Parity>(std::get<0>(key)), std::get<1>(key),
                   std::get<2>(key), c});
  return out;
}

namespace {

void check_index(const AlgebraDatum& d, Parity kind, int index) {
  const int dim = kind == Parity::Even ? d.dim_a : d.dim_u;
  if (index < 0 || index >= dim)
    throw error(errc::datum_mismatch, "basis index out of range");
}

// Bracket of two single generator modes, accumulated into `out`.
void bracket_terms(const AlgebraDatum& d, const LoopTerm& x, const LoopTerm& y,
                   LoopElement& out) {
  check_index(d, x.kind, x.basis_index);
  check_index(d, y.kind, y.basis_index);
  const Rational c = x.coeff * y.coeff;
  const long m = x.mode;
  const long n = y.mode;

  if (x.kind == Parity::Even && y.kind == Parity::Even) {
    const Rational factor = c * rational_of(m - n, 2);
    const RatVec& prod = d.mul_a[x.basis_index][y.basis_index];
    for (int k = 0; k < d.dim_a; ++k)
      out.add_term(Parity::Even, k, static_cast<int>(m + n - 1),
                   factor * prod[k]);
    if (m + n == 2)
      out.add_central(c * binomial(m, 3) *
                      d.form_a[x.basis_index][y.basis_index]);
  } else if (x.kind == Parity::Even && y.kind == Parity::Odd) {
    const Rational factor = c * rational_of(m - 2 * n, 4);
    const RatVec& au = d.act[x.basis_index][y.basis_index];
    for (int q = 0; q < d.dim_u; ++q)
      out.add_term(Parity::Odd, q, static_cast<int>(m + n - 1), factor * au[q]);
  } else if (x.kind == Parity::Odd && y.kind == Parity::Even) {
    // [u(m), a(n)] = -[a(n), u(m)]
    const Rational factor = -c * rational_of(n - 2 * m, 4);
    const RatVec& au = d.act[y.basis_index][x.basis_index];
    for (int q = 0; q < d.dim_u; ++q)
      out.add_term(Parity::Odd, q, static_cast<int>(m + n - 1), factor * au[q]);
  } else {
    // anticommutator of two odd modes
    const RatVec& circ = d.circ[x.basis_index][y.basis_index];
    for (int k = 0; k < d.dim_a; ++k)
      out.add_term(Parity::Even, k, static_cast<int>(m + n), c * circ[k]);
    if (m + n == 1)
      out.add_central(c * rational_of(m * (m - 1), 2) *
                      d.form_u[x.basis_index][y.basis_index]);
  }
}

}  // namespace

LoopElement bracket(const AlgebraDatum& d, const LoopElement& x,
                    const LoopElement& y) {
  LoopElement out;
  for (const auto& xt : x.term_list())
    for (const auto& yt : y.term_list()) bracket_terms(d, xt, yt, out);
  return out;
}

LoopElement super_jacobi_residual(const AlgebraDatum& d, const LoopElement& x,
                                  const LoopElement& y, const LoopElement& z) {
  if (!x.is_homogeneous() || !y.is_homogeneous() || !z.is_homogeneous())
    throw error(errc::invalid_argument,
                "jacobi residual needs Z2-homogeneous inputs");
  LoopElement r = bracket(d, x, bracket(d, y, z));
  LoopElement second = bracket(d, y, bracket(d, x, z));
  if (x.parity() == Parity::Odd && y.parity() == Parity::Odd) {
    r += second;
  } else {
    r -= second;
  }
  r -= bracket(d, bracket(d, x, y), z);
  return r;
}

std::vector<JacobiWitness> jacobi_scan(const AlgebraDatum& d, int window) {
  if (window < 4)
    throw error(errc::invalid_argument, "jacobi window must be >= 4");
  d.check_shapes();

  std::vector<LoopElement> gens;
  for (int m = -window; m <= window; ++m) {
    for (int i = 0; i < d.dim_a; ++i) gens.push_back(LoopElement::a_term(i, m));
    for (int p = 0; p < d.dim_u; ++p) gens.push_back(LoopElement::u_term(p, m));
  }

  std::vector<JacobiWitness> witnesses;
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        LoopElement r = super_jacobi_residual(d, x, y, z);
        if (!r.is_zero()) witnesses.push_back({x, y, z, std::move(r)});
      }
  return witnesses;
}

}  // namespace superloop
