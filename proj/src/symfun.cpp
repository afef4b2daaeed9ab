#include "lgvsym/symfun.hpp"

#include "lgvsym/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lgvsym::symfun {

using ring::Family;
using ring::Monomial;

namespace {

Polynomial x(int i) { return Polynomial::variable(Variable::x(static_cast<std::uint32_t>(i))); }

Polynomial x_power(int i, int e) {
  if (e == 0) return 1;
  return Polynomial::variable(Variable::x(static_cast<std::uint32_t>(i)),
                              static_cast<std::uint32_t>(e));
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Polynomial det_leibniz(const PolyMatrix& m, std::optional<unsigned> cap) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Polynomial total;
  do {
    Polynomial product = 1;
    for (std::size_t r = 0; r < n && !product.is_zero(); ++r) {
      product = ring::mul(product, m(r, perm[r]), cap);
    }
    if (product.is_zero()) continue;
    if (permutation_sign(perm) > 0) {
      total += product;
    } else {
      total -= product;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Polynomial det_bareiss(PolyMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Polynomial previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = ring::exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  Polynomial result = m(n - 1, n - 1);
  return sign > 0 ? result : -result;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix shapes do not chain");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Polynomial complete_homogeneous(int k, int n) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 1) return 0;
  // Walk every exponent vector of n variables summing to k.
  Polynomial sum;
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(n), 0);
  auto emit = [&] {
    std::vector<Monomial::Factor> factors;
    for (int i = 0; i < n; ++i) {
      factors.emplace_back(Variable::x(static_cast<std::uint32_t>(i + 1)),
                           exps[static_cast<std::size_t>(i)]);
    }
    sum.add_term(Monomial(std::move(factors)), 1);
  };
  // Recursive split of the remaining degree over positions i..n-1.
  auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1) {
      exps[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(remaining);
      emit();
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
      self(self, i + 1, remaining - e);
    }
  };
  fill(fill, 0, k);
  return sum;
}

Polynomial det(const PolyMatrix& m, std::optional<unsigned> degree_cap,
               DetMethod method) {
  if (m.rows() != m.cols()) {
    throw NotSquare("det: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  if (method == DetMethod::Auto) {
    method = m.rows() <= 6 ? DetMethod::Leibniz : DetMethod::Bareiss;
  }
  if (method == DetMethod::Leibniz) return det_leibniz(m, degree_cap);
  Polynomial exact = det_bareiss(m);
  return degree_cap ? ring::truncate_degree(exact, *degree_cap) : exact;
}

PolyMatrix jacobi_trudi_matrix(const Partition& lambda, int n, std::size_t size,
                               JacobiTrudiOrientation orientation) {
  PolyMatrix m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      int i = static_cast<int>(r) + 1;
      int j = static_cast<int>(c) + 1;
      int k = orientation == JacobiTrudiOrientation::Standard
                  ? lambda.part(i) - i + j
                  : lambda.part(i) + i - j;
      m(r, c) = complete_homogeneous(k, n);
    }
  }
  return m;
}

Polynomial jacobi_trudi(const Partition& lambda, int n,
                        JacobiTrudiOrientation orientation) {
  auto size = static_cast<std::size_t>(lambda.rows());
  return det(jacobi_trudi_matrix(lambda, n, size, orientation));
}

Polynomial alternant(const Partition& lambda, int n) {
  if (n < 1) throw InvalidArgument("alternant: n must be positive");
  if (lambda.rows() > n) throw InvalidArgument("alternant: more rows than variables");
  auto size = static_cast<std::size_t>(n);
  PolyMatrix m(size, size);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          x_power(i, lambda.part(j) + n - j);
    }
  }
  return det(m);
}

Polynomial vandermonde(int n) {
  Polynomial product = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) product *= x(i) - x(j);
  }
  return product;
}

Polynomial bialternant(const Partition& lambda, int n) {
  if (lambda.rows() > n) return 0;
  return ring::exact_div(alternant(lambda, n), vandermonde(n));
}

Polynomial falling_power(Variable v, int k) {
  if (k < 0) throw InvalidArgument("falling_power: negative exponent");
  Polynomial product = 1;
  for (int t = 1; t <= k; ++t) {
    product *= Polynomial::variable(v) -
               Polynomial::variable(Variable::a(static_cast<std::uint32_t>(t)));
  }
  return product;
}

Polynomial factorial_alternant(const Partition& lambda, int n) {
  if (n < 1) throw InvalidArgument("factorial_alternant: n must be positive");
  if (lambda.rows() > n) {
    throw InvalidArgument("factorial_alternant: more rows than variables");
  }
  auto size = static_cast<std::size_t>(n);
  PolyMatrix m(size, size);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          falling_power(Variable::x(static_cast<std::uint32_t>(j)), lambda.part(i) + n - i);
    }
  }
  return det(m);
}

Polynomial factorial_schur_quotient(const Partition& lambda, int n) {
  if (lambda.rows() > n) return 0;
  return ring::exact_div(factorial_alternant(lambda, n), vandermonde(n));
}

Polynomial rename_tail_to_shifts(const Polynomial& p, int n) {
  if (n < 0) throw InvalidArgument("rename_tail_to_shifts: negative n");
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : m.factors()) {
      if (v.family == Family::X && v.index > static_cast<std::uint32_t>(n)) {
        factors.emplace_back(Variable::a(v.index - static_cast<std::uint32_t>(n)), e);
      } else {
        factors.emplace_back(v, e);
      }
    }
    out.add_term(Monomial(std::move(factors)), c);
  }
  return out;
}

Polynomial divided_difference(int power, int k) {
  if (power < 0) throw InvalidArgument("divided_difference: negative power");
  if (k < 1 || k > power + 1) {
    throw InvalidArgument("divided_difference: need 1 <= k <= power + 1");
  }
  Polynomial current = x_power(1, power);
  for (int len = 2; len <= k; ++len) {
    // f[x_2..x_len] is f[x_1..x_{len-1}] with every x index shifted by one.
    Polynomial shifted = ring::substitute_family(current, Family::X, Family::X, 1);
    current = ring::exact_div(current - shifted, x(1) - x(len));
  }
  return current;
}

Polynomial divided_difference_at(int power, int start, int k) {
  if (start < 1) throw InvalidArgument("divided_difference_at: start must be >= 1");
  return ring::substitute_family(divided_difference(power, k), Family::X, Family::X,
                                 start - 1);
}

Polynomial newton_expand(int power) {
  if (power < 0) throw InvalidArgument("newton_expand: negative power");
  Polynomial sum;
  Polynomial basis = 1;  // (t - x_1)...(t - x_k)
  const Polynomial t = Polynomial::variable(Variable::t());
  for (int k = 0; k <= power; ++k) {
    sum += divided_difference(power, k + 1) * basis;
    basis *= t - x(k + 1);
  }
  return sum;
}

}  // namespace lgvsym::symfun
