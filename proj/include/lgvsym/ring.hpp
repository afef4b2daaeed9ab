#pragma once

/**
 * @file ring.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients.
 *
 * Variables come in four families: the data variables x_i, the second
 * alphabet y_i, the shift parameters a_i, and the single free variable t.
 * The variable order is t < x_1 < x_2 < ... < y_1 < ... < a_1 < ..., and the
 * monomial order is graded lexicographic with respect to it: higher total
 * degree wins, ties are broken at the first variable (in variable order)
 * whose exponents differ, the larger exponent winning. So x1 > x2 in the
 * monomial order and t^2 > x1^2.
 *
 * A Polynomial is always canonical: no zero coefficients, no zero exponents.
 * Equality of polynomials is equality of their term maps.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgvsym::ring {

using Integer = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { T = 0, X = 1, Y = 2, A = 3 };

struct Variable {
  Family family = Family::T;
  std::uint32_t index = 0;

  static Variable x(std::uint32_t i);
  static Variable y(std::uint32_t i);
  static Variable a(std::uint32_t i);
  static Variable t() { return Variable{Family::T, 0}; }

  // Throws InvalidArgument for a family/index combination that cannot occur.
  static Variable make(Family f, std::uint32_t i);

  auto operator<=>(const Variable&) const = default;
};

std::string to_string(Variable v);
std::string to_string(Family f);

class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  // Factors may arrive in any order; repeated variables are merged and zero
  // exponents dropped.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Variable v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t degree_in(Family f) const;
  std::uint32_t exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  // Graded lexicographic order.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  std::vector<Factor> factors_;  // sorted by variable, exponents >= 1
  std::uint32_t degree_ = 0;
};

class Polynomial {
 public:
  // Descending graded-lex: begin() is the leading term.
  using Terms = std::map<Monomial, Integer, std::greater<>>;

  Polynomial() = default;
  Polynomial(long long constant);  // NOLINT: implicit on purpose, like an integer
  explicit Polynomial(const Integer& constant);

  static Polynomial variable(Variable v, std::uint32_t exponent = 1);
  static Polynomial term(const Monomial& m, const Integer& coefficient);
  // Drops zero coefficients and merges nothing: the map is already keyed.
  static Polynomial from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Precondition: !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Integer& leading_coefficient() const { return terms_.begin()->second; }
  Integer coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Adds c * m in place.
  void add_term(const Monomial& m, const Integer& c);

 private:
  void check_invariants() const;

  Terms terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);

// Product; with a cap, every monomial of total degree > cap is discarded.
Polynomial mul(const Polynomial& p, const Polynomial& q,
               std::optional<unsigned> degree_cap = std::nullopt);

Polynomial pow(const Polynomial& p, unsigned k,
               std::optional<unsigned> degree_cap = std::nullopt);

// Exact quotient by graded-lex leading-term cancellation. Throws NotDivisible
// when d does not divide p, and InvalidArgument when d is zero.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

// Sets every variable (family, k) with k >= from_index to zero.
Polynomial substitute_zero(const Polynomial& p, Family family,
                           std::uint32_t from_index);

// Renames (family, k) to (target, k + shift) for every k. Throws
// IndexUnderflow when a shifted index drops below 1.
Polynomial substitute_family(const Polynomial& p, Family family, Family target,
                             long long shift);

// Swaps two variables; used to test symmetry and antisymmetry.
Polynomial swap_variables(const Polynomial& p, Variable u, Variable v);

// Keeps the terms of total degree <= cap.
Polynomial truncate_degree(const Polynomial& p, unsigned cap);

// Keeps the terms whose degree in `family` is <= cap.
Polynomial truncate_family_degree(const Polynomial& p, Family family,
                                  unsigned cap);

// Keeps the terms whose degree in `family` is exactly d.
Polynomial family_component(const Polynomial& p, Family family, unsigned d);

using Assignment = std::map<Variable, Integer>;

// Throws UnassignedVariable naming the first variable missing from `values`.
Integer eval_int(const Polynomial& p, const Assignment& values);

// Renders with the grammar
//   poly   := "0" | ["-"] term (" + " term | " - " term)*
//   term   := coeff | [coeff "*"] factor ("*" factor)*
//   factor := var ["^" exp]        (exp >= 2)
//   var    := "x" idx | "y" idx | "a" idx | "t"
// with terms in descending graded-lex order.
std::string canonical_text(const Polynomial& p);

// Accepts canonical text and, more leniently, any sum of such terms in any
// order with arbitrary whitespace. Throws ParseError.
Polynomial parse_polynomial(std::string_view text);

}  // namespace lgvsym::ring
