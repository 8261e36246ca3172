#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superloop/datum.hpp"
#include "superloop/half_int.hpp"
#include "superloop/loop.hpp"

namespace superloop {

enum class VacuumKind {
  VacuumV,  // induced from the trivial action of all modes >= 0
  VermaM,   // generalized Verma: a(1) acts by lambda, creators have mode <= 0
};

/// Everything a module instance depends on. Immutable after validate().
struct ModuleConfig {
  AlgebraDatum datum;
  Rational ell;      // eigenvalue of the central element
  RatVec lambda;     // functional on A; must be all-zero for VacuumV
  VacuumKind kind = VacuumKind::VacuumV;
  HalfInt max_degree;  // truncation bound D >= 0

  /// Throws error{errc::invalid_argument} on a malformed configuration.
  void validate() const;
};

/// One generator mode x(m) acting on the lowest-weight vector.
struct ModeSymbol {
  Parity kind;
  int basis_index;
  int mode;

  HalfInt degree() const { return loop_degree(kind, mode); }

  /// Normal order: mode ascending, Even before Odd, index ascending.
  friend bool operator<(const ModeSymbol& a, const ModeSymbol& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.basis_index < b.basis_index;
  }
  friend bool operator==(const ModeSymbol& a, const ModeSymbol& b) {
    return a.mode == b.mode && a.kind == b.kind &&
           a.basis_index == b.basis_index;
  }
};

/// Normal-ordered creation word applied to the lowest-weight vector.
/// Invariants: sorted by the symbol order, no repeated odd symbol, degree
/// bounded by the configuration's max_degree.
struct PBWMonomial {
  std::vector<ModeSymbol> word;

  HalfInt degree() const;
  int odd_count() const;
  int parity() const { return odd_count() % 2; }
  bool empty() const { return word.empty(); }

  friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
    return a.word < b.word;
  }
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.word == b.word;
  }

  std::string str() const;  // e.g. "a0(-2) u1(-1)" with the vacuum implied
};

/// Sparse rational combination of monomials. `truncated()` reports whether
/// any contribution beyond max_degree was discarded while producing it;
/// value equality ignores the flag.
class ModuleVector {
 public:
  ModuleVector() = default;

  static ModuleVector monomial(PBWMonomial m, Rational coeff = 1);

  void add(const PBWMonomial& m, const Rational& c);
  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& c);
  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  bool operator==(const ModuleVector& o) const { return entries_ == o.entries_; }

  bool is_zero() const { return entries_.empty(); }
  const std::map<PBWMonomial, Rational>& entries() const { return entries_; }

  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }
  void absorb_flag(const ModuleVector& o) { truncated_ |= o.truncated_; }

  /// Degree when all monomials agree; nullopt for 0 or mixed vectors.
  std::optional<HalfInt> homogeneous_degree() const;
  /// Z2-parity when well defined (all monomials same odd-count parity).
  std::optional<int> homogeneous_parity() const;

  std::string str() const;

 private:
  std::map<PBWMonomial, Rational> entries_;
  bool truncated_ = false;
};

/// Degree-truncated model of the induced module: the vacuum-type module for
/// VacuumV (creators mode <= -1) or the generalized Verma module for VermaM
/// (creators mode <= 0, a(1) acting by lambda). Rewriting results are
/// memoized per instance; instances are not thread-safe, create one per
/// worker.
class InducedModule {
 public:
  explicit InducedModule(ModuleConfig cfg);

  const ModuleConfig& config() const { return cfg_; }
  const AlgebraDatum& datum() const { return cfg_.datum; }

  /// Largest creation mode for the kind of generator.
  int creation_max() const {
    return cfg_.kind == VacuumKind::VacuumV ? -1 : 0;
  }
  bool is_creation(const ModeSymbol& s) const {
    return s.mode <= creation_max();
  }

  ModuleVector lowest_weight_vector() const;

  /// Action of the generator mode, normal-ordering the result. Monomials
  /// beyond max_degree are discarded and the result flagged truncated.
  ModuleVector apply_mode(const ModeSymbol& s, const ModuleVector& v) const;

  /// Action of a whole loop element, with the central element sent to ell.
  ModuleVector apply_loop(const LoopElement& e, const ModuleVector& v) const;

  /// All normal-ordered monomials of exact degree d, deterministic order.
  /// Throws error{errc::degree_out_of_range} unless 0 <= d <= max_degree.
  const std::vector<PBWMonomial>& basis(HalfInt d) const;
  long graded_dimension(HalfInt d) const;

  /// Derivation with D(x(n)) = -n x(n-1), D(lowest) = 0. VacuumV only;
  /// throws error{errc::unsupported} for VermaM.
  ModuleVector translation_D(const ModuleVector& v) const;

  /// Coordinates of a homogeneous degree-d vector in basis(d) order.
  RatVec coordinates(const ModuleVector& v, HalfInt d) const;

  /// lambda evaluated on an A-coordinate vector.
  Rational lambda_of(const RatVec& a) const;

 private:
  ModuleVector apply_to_word(const ModeSymbol& s,
                             const std::vector<ModeSymbol>& word) const;

  ModuleConfig cfg_;
  mutable std::map<std::pair<ModeSymbol, std::vector<ModeSymbol>>, ModuleVector>
      memo_;
  mutable std::map<long, std::vector<PBWMonomial>> basis_cache_;  // by 2*d
};

}  // namespace superloop
