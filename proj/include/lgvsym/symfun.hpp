#pragma once

#include "lgvsym/combinat.hpp"
#include "lgvsym/ring.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lgvsym::symfun {

using combinat::Partition;
using ring::Polynomial;
using ring::Variable;

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // 0-based access.
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

// h_k(x_1..x_n): 1 for k = 0, 0 for k < 0.
Polynomial complete_homogeneous(int k, int n);

enum class DetMethod { Auto, Leibniz, Bareiss };

// Exact determinant. Auto uses Leibniz expansion up to 6x6 and fraction-free
// Bareiss elimination above. With a degree cap, every product is truncated;
// the Bareiss path then computes exactly and truncates at the end.
// Throws NotSquare.
Polynomial det(const PolyMatrix& m, std::optional<unsigned> degree_cap = std::nullopt,
               DetMethod method = DetMethod::Auto);

// Index orientation of the Jacobi-Trudi matrix. Standard is h_{lambda_i - i + j}
// and agrees with the tableau definition. AsPrinted is h_{lambda_i + i - j};
// it is kept as a negative control and vanishes already at lambda = (2,1).
enum class JacobiTrudiOrientation { Standard, AsPrinted };

PolyMatrix jacobi_trudi_matrix(const Partition& lambda, int n, std::size_t size,
                               JacobiTrudiOrientation orientation =
                                   JacobiTrudiOrientation::Standard);

// det(h_{lambda_i - i + j}) on the rows(lambda) x rows(lambda) matrix.
Polynomial jacobi_trudi(const Partition& lambda, int n,
                        JacobiTrudiOrientation orientation =
                            JacobiTrudiOrientation::Standard);

// det(x_i^{lambda_j + n - j}), n x n. Throws InvalidArgument if rows > n.
Polynomial alternant(const Partition& lambda, int n);

// prod_{i<j} (x_i - x_j), expanded directly (not through a determinant).
Polynomial vandermonde(int n);

// alternant / vandermonde; 0 when lambda has more than n rows.
Polynomial bialternant(const Partition& lambda, int n);

// (v | a)^k = (v - a_1)...(v - a_k).
Polynomial falling_power(Variable v, int k);

// det[(x_j | a)^{lambda_i + n - i}].
Polynomial factorial_alternant(const Partition& lambda, int n);

Polynomial factorial_schur_quotient(const Partition& lambda, int n);

// Maps x_{n+i} to a_i for every i >= 1 and leaves x_1..x_n alone.
Polynomial rename_tail_to_shifts(const Polynomial& p, int n);

// f[x_1, ..., x_k] for f(x) = x^power, via
//   f[x_1..x_k] = (f[x_1..x_{k-1}] - f[x_2..x_k]) / (x_1 - x_k).
// Requires 1 <= k <= power + 1.
Polynomial divided_difference(int power, int k);

// f[x_start, ..., x_{start+k-1}], the shifted table entry.
Polynomial divided_difference_at(int power, int start, int k);

// sum_k f[x_1..x_{k+1}] (t - x_1)...(t - x_k), which collapses to t^power.
Polynomial newton_expand(int power);

}  // namespace lgvsym::symfun
