#pragma once

#include <optional>
#include <vector>

#include "superloop/rational.hpp"

namespace superloop {

/// Dense exact linear algebra over Q, sized for desk-scale Gram and kernel
/// work. Matrices are row vectors of equal length.

/// Reduced row echelon form in place; returns the pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

std::size_t rank(RatMat m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<RatVec> null_space(const RatMat& m, std::size_t cols);

/// Particular solution of m x = rhs, or nullopt when inconsistent.
std::optional<RatVec> solve(RatMat m, RatVec rhs);

/// True when the two row sets span the same subspace of Q^cols.
bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
               std::size_t cols);

/// True when v lies in the row span.
bool in_span(const std::vector<RatVec>& basis, const RatVec& v,
             std::size_t cols);

}  // namespace superloop
