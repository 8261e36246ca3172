#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superloop/linalg.hpp"
#include "superloop/module.hpp"

namespace superloop {

/// Rescaled invariant pairing: the leading creation symbol of the left
/// argument is peeled with the rational adjoints a(n) -> a(2-n),
/// u(n) -> u(1-n) down to <lowest, lowest> = 1. This differs from the
/// honest complex-valued form by an invertible diagonal rescaling of the
/// rows (a factor per odd symbol of the left argument), so ranks, right
/// kernels and characters agree. Vectors of unequal degree pair to zero;
/// with strict=true that raises error{errc::degree_mismatch} instead.
Rational pairing(const InducedModule& mod, const ModuleVector& x,
                 const ModuleVector& y, bool strict = false);

struct GramMatrix {
  HalfInt degree;
  std::vector<PBWMonomial> basis;  // row and column order
  RatMat entries;

  std::size_t rank() const;
};

GramMatrix gram(const InducedModule& mod, HalfInt d);

struct RadicalBasis {
  HalfInt degree;
  std::vector<ModuleVector> vectors;  // linearly independent kernel vectors

  long dim() const { return static_cast<long>(vectors.size()); }
};

/// Right kernel of the degree-d Gram matrix: the degree-d slice of the
/// maximal graded submodule.
RadicalBasis radical_basis(const InducedModule& mod, HalfInt d);

struct BruteForceOptions {
  int max_degree_zero_symbols = 4;  // cap on degree-preserving modes per word
};

/// Independent oracle: v lies in the maximal graded submodule slice iff
/// every word of annihilation-range modes mapping degree d to degree 0
/// kills it. Enumerates normal-ordered annihilation words whose running
/// degree stays within [0, max_degree] and intersects their kernels.
RadicalBasis brute_force_radical(const InducedModule& mod, HalfInt d,
                                 const BruteForceOptions& opt = {});

struct CharacterRow {
  HalfInt degree;
  long dim_big;
  long dim_radical;
  long dim_simple;
};

using CharacterSeries = std::vector<CharacterRow>;

/// Graded dimensions of the module, its radical, and the simple quotient,
/// for every degree 0, 1/2, ..., max_d.
CharacterSeries character(const InducedModule& mod, HalfInt max_d);

/// Basis monomials representing the simple quotient at degree d (pivot
/// columns of the reduced Gram matrix).
std::vector<PBWMonomial> simple_basis_representatives(const InducedModule& mod,
                                                      HalfInt d);

struct ContragredientReport {
  bool adjoint_ok = false;        // <a(n)x, y> = <x, a(2-n)y> on the grid
  bool lambda_ok = false;         // form reproduces the a(1)-eigenvalues
  bool block_symmetry_ok = false; // Gram symmetric on equal odd-count-mod-4
                                  // blocks
  bool signed_symmetry_ok = false;  // informational: one consistent sign per
                                    // odd-count-class pair
  bool ok() const { return adjoint_ok && lambda_ok && block_symmetry_ok; }
  std::vector<std::string> failures;
};

/// Invariance checks on the generalized Verma module: the even adjoint
/// relation for n in [-2, 4] on compatible degree pairs, the lambda
/// eigenvalue through the form, and blockwise symmetry of the Gram matrices
/// up to degree_cap (default max_degree - 3).
ContragredientReport contragredient_check(
    const InducedModule& mod, std::optional<HalfInt> degree_cap = std::nullopt);

/// Rank of the degree-d Gram matrix for each level in ells; the module is
/// rebuilt per level. Used to locate rank drops (candidate degenerate
/// levels).
std::vector<std::pair<Rational, long>> ell_scan(const ModuleConfig& base,
                                                HalfInt d,
                                                const std::vector<Rational>& ells);

}  // namespace superloop
