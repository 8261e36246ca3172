#include "superloop/linalg.hpp"

#include <algorithm>

namespace superloop {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::vector<RatVec> null_space(const RatMat& m, std::size_t cols) {
  RatMat work = m;
  for (auto& r : work) r.resize(cols, Rational(0));
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -work[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat m, RatVec rhs) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  RatMat work = m;
  const auto pivots = rref(work);
  // Inconsistent iff some pivot lands in the appended column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = work[i][cols];
  return x;
}

bool same_span(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
               std::size_t cols) {
  auto reduced = [cols](const std::vector<RatVec>& rows) {
    RatMat m = rows;
    for (auto& r : m) r.resize(cols, Rational(0));
    const auto pivots = rref(m);
    m.resize(pivots.size());
    return m;
  };
  return reduced(a) == reduced(b);
}

bool in_span(const std::vector<RatVec>& basis, const RatVec& v,
             std::size_t cols) {
  RatMat m = basis;
  m.push_back(v);
  return rank(std::move(m)) == rank([&] {
           RatMat b = basis;
           for (auto& r : b) r.resize(cols, Rational(0));
           return b;
         }());
}

}  // namespace superloop
