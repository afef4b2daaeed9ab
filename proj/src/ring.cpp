#include "lgvsym/ring.hpp"

#include "lgvsym/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace lgvsym::ring {

Variable Variable::make(Family f, std::uint32_t i) {
  if (f == Family::T) {
    if (i != 0) throw InvalidArgument("variable t carries no index");
    return t();
  }
  if (i == 0) {
    throw InvalidArgument("variable " + to_string(f) + " needs an index >= 1");
  }
  return Variable{f, i};
}

Variable Variable::x(std::uint32_t i) { return make(Family::X, i); }
Variable Variable::y(std::uint32_t i) { return make(Family::Y, i); }
Variable Variable::a(std::uint32_t i) { return make(Family::A, i); }

std::string to_string(Family f) {
  switch (f) {
    case Family::T: return "t";
    case Family::X: return "x";
    case Family::Y: return "y";
    case Family::A: return "a";
  }
  return "?";
}

std::string to_string(Variable v) {
  if (v.family == Family::T) return "t";
  return to_string(v.family) + std::to_string(v.index);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
    degree_ += e;
  }
}

Monomial Monomial::of(Variable v, std::uint32_t exponent) {
  return Monomial({{v, exponent}});
}

std::uint32_t Monomial::degree_in(Family f) const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) {
    if (v.family == f) d += e;
  }
  return d;
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), v,
      [](const Factor& f, const Variable& key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial out;
  auto it = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (it != divisor.factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
    if (i->first != j->first) {
      // The side holding the earlier variable has a positive exponent where
      // the other has zero.
      return i->first < j->first ? std::strong_ordering::greater
                                 : std::strong_ordering::less;
    }
    if (i->second != j->second) return i->second <=> j->second;
  }
  // Equal degree and a common prefix means both are exhausted.
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Variable v, std::uint32_t exponent) {
  return term(Monomial::of(v, exponent), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(m, coefficient);
  return p;
}

Polynomial Polynomial::from_terms(Terms terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  std::erase_if(p.terms_, [](const auto& kv) { return kv.second == 0; });
  p.check_invariants();
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  check_invariants();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  check_invariants();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = mul(*this, other);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return mul(a, b);
}

void Polynomial::check_invariants() const {
#ifndef NDEBUG
  for (const auto& [m, c] : terms_) {
    assert(c != 0);
    for (const auto& f : m.factors()) assert(f.second > 0);
  }
#endif
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q,
               std::optional<unsigned> degree_cap) {
  Polynomial out;
  if (p.is_zero() || q.is_zero()) return out;
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      if (degree_cap && mp.degree() + mq.degree() > *degree_cap) continue;
      out.add_term(mp * mq, cp * cq);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k,
               std::optional<unsigned> degree_cap) {
  Polynomial out = 1;
  for (unsigned i = 0; i < k; ++i) out = mul(out, p, degree_cap);
  return degree_cap ? truncate_degree(out, *degree_cap) : out;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InvalidArgument("exact_div: division by zero");
  const Monomial& lead_m = d.leading_monomial();
  const Integer& lead_c = d.leading_coefficient();
  Polynomial quotient;
  Polynomial rest = p;
  while (!rest.is_zero()) {
    const Monomial& rm = rest.leading_monomial();
    const Integer& rc = rest.leading_coefficient();
    if (!lead_m.divides(rm) || rc % lead_c != 0) {
      throw NotDivisible("exact_div: leading term " +
                         canonical_text(Polynomial::term(rm, rc)) +
                         " is not divisible by " +
                         canonical_text(Polynomial::term(lead_m, lead_c)));
    }
    Polynomial step = Polynomial::term(rm.quotient(lead_m), rc / lead_c);
    rest -= mul(step, d);
    quotient += step;
  }
  return quotient;
}

Polynomial substitute_zero(const Polynomial& p, Family family,
                           std::uint32_t from_index) {
  Polynomial::Terms kept;
  for (const auto& [m, c] : p.terms()) {
    bool killed = std::any_of(m.factors().begin(), m.factors().end(),
                              [&](const Monomial::Factor& f) {
                                return f.first.family == family &&
                                       f.first.index >= from_index;
                              });
    if (!killed) kept.emplace(m, c);
  }
  return Polynomial::from_terms(std::move(kept));
}

namespace {

template <typename Rename>
Polynomial rename_variables(const Polynomial& p, Rename rename) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(m.factors().size());
    for (const auto& [v, e] : m.factors()) factors.emplace_back(rename(v), e);
    out.add_term(Monomial(std::move(factors)), c);
  }
  return out;
}

}  // namespace

Polynomial substitute_family(const Polynomial& p, Family family, Family target,
                             long long shift) {
  if (family == Family::T || target == Family::T) {
    throw InvalidArgument("substitute_family: t is not an indexed family");
  }
  return rename_variables(p, [&](Variable v) {
    if (v.family != family) return v;
    long long k = static_cast<long long>(v.index) + shift;
    if (k < 1) {
      throw IndexUnderflow("substitute_family: " + to_string(v) +
                           " shifted to index " + std::to_string(k));
    }
    return Variable{target, static_cast<std::uint32_t>(k)};
  });
}

Polynomial swap_variables(const Polynomial& p, Variable u, Variable v) {
  return rename_variables(p, [&](Variable w) {
    if (w == u) return v;
    if (w == v) return u;
    return w;
  });
}

Polynomial truncate_degree(const Polynomial& p, unsigned cap) {
  Polynomial::Terms kept;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() <= cap) kept.emplace(m, c);
  }
  return Polynomial::from_terms(std::move(kept));
}

Polynomial truncate_family_degree(const Polynomial& p, Family family,
                                  unsigned cap) {
  Polynomial::Terms kept;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in(family) <= cap) kept.emplace(m, c);
  }
  return Polynomial::from_terms(std::move(kept));
}

Polynomial family_component(const Polynomial& p, Family family, unsigned d) {
  Polynomial::Terms kept;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree_in(family) == d) kept.emplace(m, c);
  }
  return Polynomial::from_terms(std::move(kept));
}

Integer eval_int(const Polynomial& p, const Assignment& values) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        throw UnassignedVariable("eval_int: no value for " + to_string(v));
      }
      term *= boost::multiprecision::pow(it->second, e);
    }
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Text

namespace {

void render_term(std::ostringstream& out, const Monomial& m,
                 const Integer& magnitude) {
  if (m.is_one()) {
    out << magnitude;
    return;
  }
  bool first = true;
  if (magnitude != 1) {
    out << magnitude;
    first = false;
  }
  for (const auto& [v, e] : m.factors()) {
    if (!first) out << '*';
    first = false;
    out << to_string(v);
    if (e >= 2) out << '^' << e;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty input");
    Polynomial result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    result += signed_term(negative);
    skip_ws();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      result += signed_term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  Polynomial signed_term(bool negative) {
    skip_ws();
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    bool have_item = false;
    bool after_star = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= number();
      } else if (c == 'x' || c == 'y' || c == 'a' || c == 't') {
        factors.push_back(factor());
      } else {
        break;
      }
      have_item = true;
      after_star = false;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        after_star = true;
        continue;
      }
      break;
    }
    if (!have_item) fail("expected a term");
    if (after_star) fail("expected a factor after '*'");
    if (negative) coeff = -coeff;
    return Polynomial::term(Monomial(std::move(factors)), coeff);
  }

  Monomial::Factor factor() {
    char c = text_[pos_++];
    Variable v;
    if (c == 't') {
      v = Variable::t();
    } else {
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail(std::string("variable '") + c + "' needs an index");
      }
      Integer idx = number();
      if (idx < 1 || idx > Integer(0xffffffffu)) fail("variable index out of range");
      auto i = static_cast<std::uint32_t>(idx);
      v = c == 'x' ? Variable::x(i) : c == 'y' ? Variable::y(i) : Variable::a(i);
    }
    std::uint32_t e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      Integer ex = number();
      if (ex > Integer(0xffffffffu)) fail("exponent out of range");
      e = static_cast<std::uint32_t>(ex);
    }
    return {v, e};
  }

  Integer number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text, offset " + std::to_string(pos_) + ": " +
                     what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string canonical_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    render_term(out, m, negative ? Integer(-c) : c);
    first = false;
  }
  return out.str();
}

Polynomial parse_polynomial(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace lgvsym::ring
