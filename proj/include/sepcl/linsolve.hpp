#pragma once

#include <vector>

#include "sepcl/rational.hpp"

namespace sepcl {

enum class SolveStatus { Unique, None, Underdetermined };

inline std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::None: return "none";
    case SolveStatus::Underdetermined: return "underdetermined";
  }
  return "?";
}

struct LinearSolution {
  SolveStatus status = SolveStatus::None;
  std::vector<Rat> x;  // filled when unique
  int kernel_dim = 0;
};

// Solves A x = b exactly. Rows are scaled to integers, then Bareiss elimination.
inline LinearSolution solve_linear(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::vector<Integer>> M(rows, std::vector<Integer>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A[r][c].get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[r].get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) M[r][c] = Rat(A[r][c] * l).get_num();
    M[r][cols] = Rat(b[r] * l).get_num();
  }
  Integer prev = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k <= cols; ++k) {
        Integer v = M[rank][c] * M[r][k] - M[r][c] * M[rank][k];
        M[r][k] = v / prev;  // exact
      }
      M[r][c] = 0;
    }
    prev = M[rank][c];
    pivot_col.push_back(c);
    ++rank;
  }
  LinearSolution sol;
  for (std::size_t r = rank; r < rows; ++r)
    if (M[r][cols] != 0) return sol;
  if (rank < cols) {
    sol.status = SolveStatus::Underdetermined;
    sol.kernel_dim = static_cast<int>(cols - rank);
    return sol;
  }
  sol.status = SolveStatus::Unique;
  sol.x.assign(cols, Rat(0));
  for (std::size_t i = rank; i-- > 0;) {
    const std::size_t c = pivot_col[i];
    Rat acc = Rat(M[i][cols]);
    for (std::size_t k = c + 1; k < cols; ++k) acc -= Rat(M[i][k]) * sol.x[k];
    sol.x[c] = acc / Rat(M[i][c]);
  }
  return sol;
}

}  // namespace sepcl
