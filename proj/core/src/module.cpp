#include "superloop/module.hpp"

#include <algorithm>
#include <sstream>

#include "superloop/error.hpp"

namespace superloop {

void ModuleConfig::validate() const {
  datum.check_shapes();
  if (lambda.size() != static_cast<std::size_t>(datum.dim_a))
    throw error(errc::dimension_mismatch, "lambda must have dim_a entries");
  if (kind == VacuumKind::VacuumV)
    for (const auto& c : lambda)
      if (c != 0)
        throw error(errc::invalid_argument,
                    "vacuum module requires lambda = 0");
  if (max_degree < HalfInt::whole(0))
    throw error(errc::invalid_argument, "max_degree must be >= 0");
}

HalfInt PBWMonomial::degree() const {
  HalfInt d;
  for (const auto& s : word) d += s.degree();
  return d;
}

int PBWMonomial::odd_count() const {
  int c = 0;
  for (const auto& s : word)
    if (s.kind == Parity::Odd) ++c;
  return c;
}

std::string PBWMonomial::str() const {
  if (word.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << (word[i].kind == Parity::Even ? 'a' : 'u') << word[i].basis_index
        << '(' << word[i].mode << ')';
  }
  return out.str();
}

ModuleVector ModuleVector::monomial(PBWMonomial m, Rational coeff) {
  ModuleVector v;
  v.add(m, coeff);
  return v;
}

void ModuleVector::add(const PBWMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = entries_.find(m);
  if (it == entries_.end()) {
    entries_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) entries_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [m, c] : o.entries_) add(m, c);
  truncated_ |= o.truncated_;
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [m, c] : o.entries_) add(m, -c);
  truncated_ |= o.truncated_;
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [m, v] : entries_) v *= c;
  return *this;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  ModuleVector r = *this;
  r += o;
  return r;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
  ModuleVector r = *this;
  r -= o;
  return r;
}

std::optional<HalfInt> ModuleVector::homogeneous_degree() const {
  std::optional<HalfInt> d;
  for (const auto& [m, c] : entries_) {
    const HalfInt md = m.degree();
    if (!d) {
      d = md;
    } else if (*d != md) {
      return std::nullopt;
    }
  }
  return d;
}

std::optional<int> ModuleVector::homogeneous_parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : entries_) {
    const int mp = m.parity();
    if (!p) {
      p = mp;
    } else if (*p != mp) {
      return std::nullopt;
    }
  }
  return p;
}

std::string ModuleVector::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : entries_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(c) << ")·" << m.str();
  }
  return out.str();
}

InducedModule::InducedModule(ModuleConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
}

ModuleVector InducedModule::lowest_weight_vector() const {
  return ModuleVector::monomial(PBWMonomial{});
}

Rational InducedModule::lambda_of(const RatVec& a) const {
  Rational out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * cfg_.lambda[i];
  return out;
}

// Straightening of s against a normal-ordered word, the core rewrite:
//   - creation symbol in order: prepend (discard beyond max_degree),
//   - equal odd symbols: s h = 1/2 [s,h]_+,
//   - otherwise commute, s h = (-1)^{|s||h|} h s + [s,h], recursively.
ModuleVector InducedModule::apply_to_word(
    const ModeSymbol& s, const std::vector<ModeSymbol>& word) const {
  const auto key = std::make_pair(s, word);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  ModuleVector result;
  if (word.empty()) {
    if (is_creation(s)) {
      if (s.degree() <= cfg_.max_degree) {
        result = ModuleVector::monomial(PBWMonomial{{s}});
      } else {
        result.mark_truncated();
      }
    } else if (cfg_.kind == VacuumKind::VermaM && s.kind == Parity::Even &&
               s.mode == 1) {
      result = ModuleVector::monomial(PBWMonomial{}, cfg_.lambda[s.basis_index]);
    }
    // annihilation: result stays zero
  } else {
    const ModeSymbol h = word.front();
    const std::vector<ModeSymbol> rest(word.begin() + 1, word.end());
    if (is_creation(s) &&
        (s < h || (s == h && s.kind == Parity::Even))) {
      PBWMonomial m;
      m.word.reserve(word.size() + 1);
      m.word.push_back(s);
      m.word.insert(m.word.end(), word.begin(), word.end());
      if (m.degree() <= cfg_.max_degree) {
        result = ModuleVector::monomial(std::move(m));
      } else {
        result.mark_truncated();
      }
    } else if (s == h && s.kind == Parity::Odd) {
      const LoopElement lie =
          bracket(cfg_.datum, LoopElement::u_term(s.basis_index, s.mode),
                  LoopElement::u_term(h.basis_index, h.mode));
      ModuleVector rest_v = ModuleVector::monomial(PBWMonomial{rest});
      result = apply_loop(lie, rest_v);
      result *= rational_of(1, 2);
    } else {
      const bool koszul =
          s.kind == Parity::Odd && h.kind == Parity::Odd;
      ModuleVector s_rest = apply_to_word(s, rest);
      ModuleVector t1 = apply_mode(h, s_rest);
      if (koszul) t1 *= Rational(-1);
      t1.absorb_flag(s_rest);

      auto s_elt = s.kind == Parity::Even
                       ? LoopElement::a_term(s.basis_index, s.mode)
                       : LoopElement::u_term(s.basis_index, s.mode);
      auto h_elt = h.kind == Parity::Even
                       ? LoopElement::a_term(h.basis_index, h.mode)
                       : LoopElement::u_term(h.basis_index, h.mode);
      const LoopElement lie = bracket(cfg_.datum, s_elt, h_elt);
      ModuleVector rest_v = ModuleVector::monomial(PBWMonomial{rest});
      result = std::move(t1);
      result += apply_loop(lie, rest_v);
    }
  }

  memo_.emplace(key, result);
  return result;
}

ModuleVector InducedModule::apply_mode(const ModeSymbol& s,
                                       const ModuleVector& v) const {
  ModuleVector out;
  out.absorb_flag(v);
  for (const auto& [m, c] : v.entries()) {
    ModuleVector part = apply_to_word(s, m.word);
    out.absorb_flag(part);
    part *= c;
    out += part;
  }
  return out;
}

ModuleVector InducedModule::apply_loop(const LoopElement& e,
                                       const ModuleVector& v) const {
  ModuleVector out;
  out.absorb_flag(v);
  for (const auto& t : e.term_list()) {
    ModuleVector part =
        apply_mode(ModeSymbol{t.kind, t.basis_index, t.mode}, v);
    part *= t.coeff;
    out.absorb_flag(part);
    out += part;
  }
  if (e.k_coeff() != 0) {
    ModuleVector central = v;
    central *= e.k_coeff() * cfg_.ell;
    out += central;
  }
  return out;
}

const std::vector<PBWMonomial>& InducedModule::basis(HalfInt d) const {
  if (d < HalfInt::whole(0) || d > cfg_.max_degree)
    throw error(errc::degree_out_of_range,
                "degree " + d.str() + " outside [0, " + cfg_.max_degree.str() +
                    "]");
  if (auto it = basis_cache_.find(d.twice()); it != basis_cache_.end())
    return it->second;

  std::vector<PBWMonomial> out;
  std::vector<ModeSymbol> word;

  // Words are built in ascending symbol order; a candidate must be >= the
  // last chosen symbol (strictly > for a repeated odd symbol).
  auto min_mode_even = [&](HalfInt remaining) {
    // degree 1 - m <= remaining  =>  m >= 1 - remaining
    return 1 - remaining.floor();
  };
  auto min_mode_odd = [&](HalfInt remaining) {
    // degree 1/2 - m <= remaining  =>  2m >= 1 - 2r
    const long t = 1 - remaining.twice();
    return static_cast<int>((t >= 0) ? (t + 1) / 2 : -((-t) / 2));
  };

  auto gen = [&](auto&& self, HalfInt remaining,
                 std::optional<ModeSymbol> last) -> void {
    if (remaining == HalfInt::whole(0)) {
      out.push_back(PBWMonomial{word});
      return;
    }
    const int lo = static_cast<int>(
        std::min<long>(min_mode_even(remaining), min_mode_odd(remaining)));
    for (int mode = lo; mode <= creation_max(); ++mode) {
      for (int kind = 0; kind < 2; ++kind) {
        const Parity p = static_cast<Parity>(kind);
        const int dim = p == Parity::Even ? cfg_.datum.dim_a : cfg_.datum.dim_u;
        for (int idx = 0; idx < dim; ++idx) {
          const ModeSymbol s{p, idx, mode};
          const HalfInt sd = s.degree();
          if (sd > remaining) continue;
          if (last) {
            if (s < *last) continue;
            if (s == *last && p == Parity::Odd) continue;
          }
          word.push_back(s);
          self(self, remaining - sd, s);
          word.pop_back();
        }
      }
    }
  };
  gen(gen, d, std::nullopt);

  auto [it, inserted] = basis_cache_.emplace(d.twice(), std::move(out));
  return it->second;
}

long InducedModule::graded_dimension(HalfInt d) const {
  return static_cast<long>(basis(d).size());
}

ModuleVector InducedModule::translation_D(const ModuleVector& v) const {
  if (cfg_.kind != VacuumKind::VacuumV)
    throw error(errc::unsupported,
                "the derivation is defined on the vacuum module only");
  ModuleVector out;
  out.absorb_flag(v);
  for (const auto& [m, c] : v.entries()) {
    for (std::size_t i = 0; i < m.word.size(); ++i) {
      if (m.word[i].mode == 0) continue;  // -n factor vanishes
      std::vector<ModeSymbol> seq = m.word;
      const Rational factor = c * Rational(-seq[i].mode);
      seq[i].mode -= 1;
      // Re-normal-order the replaced product by folding right to left.
      ModuleVector term = lowest_weight_vector();
      for (auto it = seq.rbegin(); it != seq.rend(); ++it)
        term = apply_mode(*it, term);
      term *= factor;
      out.absorb_flag(term);
      out += term;
    }
  }
  return out;
}

RatVec InducedModule::coordinates(const ModuleVector& v, HalfInt d) const {
  const auto& monomials = basis(d);
  std::map<PBWMonomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
  RatVec coords(monomials.size(), Rational(0));
  for (const auto& [m, c] : v.entries()) {
    auto it = index.find(m);
    if (it == index.end())
      throw error(errc::degree_mismatch,
                  "vector has a component outside degree " + d.str());
    coords[it->second] = c;
  }
  return coords;
}

}  // namespace superloop
