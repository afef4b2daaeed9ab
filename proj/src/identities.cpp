#include "lgvsym/identities.hpp"

#include "lgvsym/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace lgvsym::identities {

using combinat::conjugate;
using combinat::partitions_in_box;
using combinat::partitions_up_to;
using combinat::schur_tableaux;
using lgv::LatticePoint;
using lgv::LatticeScheme;
using lgv::SchemeKind;
using ring::Family;
using ring::Polynomial;
using ring::Variable;

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "VERIFIED";
    case Status::Mismatch: return "MISMATCH";
    case Status::Error: return "ERROR";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxDiffTerms = 50;
constexpr int kEvalPoints = 10;
constexpr std::size_t kMaxCauchyPartitions = 5000;
constexpr int kMaxCauchyN = 5;

Polynomial x(int i) { return Polynomial::variable(Variable::x(static_cast<std::uint32_t>(i))); }
Polynomial y(int i) { return Polynomial::variable(Variable::y(static_cast<std::uint32_t>(i))); }

Polynomial in_y(const Polynomial& p) {
  return ring::substitute_family(p, Family::X, Family::Y, 0);
}

// Accumulates sub-checks of one identity. The first failure wins; later
// comparisons are skipped and report false.
class Checker {
 public:
  using Clock = std::chrono::steady_clock;

  Checker(std::string identity, std::vector<std::pair<std::string, std::string>> params)
      : start_(Clock::now()), rng_(0x5eedULL) {
    report_.identity = std::move(identity);
    report_.params = std::move(params);
  }

  void param(std::string key, std::string value) {
    report_.params.emplace_back(std::move(key), std::move(value));
  }

  bool failed() const { return report_.status != Status::Verified; }

  bool equal(const Polynomial& lhs, const Polynomial& rhs, const std::string& label) {
    if (failed()) return false;
    if (!(lhs == rhs)) {
      mismatch(lhs, rhs, label);
      return false;
    }
    return spot_check(lhs, rhs, label);
  }

  bool expect(bool holds, const std::string& label) {
    if (failed()) return false;
    if (!holds) {
      report_.status = Status::Mismatch;
      report_.message = label;
    }
    return holds;
  }

  void error(const std::string& what) {
    report_.status = Status::Error;
    report_.lhs.reset();
    report_.rhs.reset();
    report_.message = what;
  }

  CheckReport finish() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - start_)
                             .count();
    return std::move(report_);
  }

 private:
  void mismatch(const Polynomial& lhs, const Polynomial& rhs, const std::string& label) {
    std::set<ring::Monomial, std::greater<>> monomials;
    for (const auto& [m, c] : lhs.terms()) monomials.insert(m);
    for (const auto& [m, c] : rhs.terms()) monomials.insert(m);
    Polynomial::Terms left;
    Polynomial::Terms right;
    std::size_t kept = 0;
    for (const auto& m : monomials) {
      if (kept == kMaxDiffTerms) break;
      ring::Integer cl = lhs.coefficient(m);
      ring::Integer cr = rhs.coefficient(m);
      if (cl == cr) continue;
      ++kept;
      if (cl != 0) left.emplace(m, cl);
      if (cr != 0) right.emplace(m, cr);
    }
    report_.status = Status::Mismatch;
    report_.lhs = ring::canonical_text(Polynomial::from_terms(std::move(left)));
    report_.rhs = ring::canonical_text(Polynomial::from_terms(std::move(right)));
    report_.message = label;
  }

  // Guards against a canonicalisation bug making unequal values compare equal.
  bool spot_check(const Polynomial& lhs, const Polynomial& rhs, const std::string& label) {
    std::set<Variable> vars;
    for (const auto* p : {&lhs, &rhs}) {
      for (const auto& [m, c] : p->terms()) {
        for (const auto& [v, e] : m.factors()) vars.insert(v);
      }
    }
    std::uniform_int_distribution<int> value(-9, 9);
    for (int k = 0; k < kEvalPoints; ++k) {
      ring::Assignment point;
      for (Variable v : vars) point[v] = value(rng_);
      if (ring::eval_int(lhs, point) != ring::eval_int(rhs, point)) {
        report_.status = Status::Mismatch;
        report_.message = label + " (symbolically equal, but evaluation differs)";
        return false;
      }
    }
    return true;
  }

  Clock::time_point start_;
  std::mt19937_64 rng_;
  CheckReport report_;
};

using Params = std::vector<std::pair<std::string, std::string>>;

CheckReport run_check(std::string identity, Params params,
                      const std::function<void(Checker&)>& body) {
  Checker checker(std::move(identity), std::move(params));
  try {
    body(checker);
  } catch (const std::exception& e) {
    checker.error(e.what());
  }
  return checker.finish();
}

std::string str(int v) { return std::to_string(v); }

std::string pt(LatticePoint p) { return lgv::to_string(p); }

}  // namespace

// ---------------------------------------------------------------------------

CheckReport verify_main_lemma(int m_max, int n_max, bool corrupt_weights) {
  return run_check("main-lemma", {{"m_max", str(m_max)}, {"n_max", str(n_max)}},
                   [&](Checker& c) {
    if (m_max < 1 || n_max < 1) throw InvalidArgument("main-lemma: m_max, n_max must be >= 1");
    LatticeScheme s = LatticeScheme::schur_weighted(n_max, m_max);
    s.corrupted = corrupt_weights;
    const LatticePoint a{1, 1};
    for (int m = 1; m <= m_max; ++m) {
      for (int n = 1; n <= n_max; ++n) {
        const std::string at = "m=" + str(m) + ", n=" + str(n);
        Polynomial e = lgv::e_weight(s, a, {m, n});
        if (!c.equal(e, lgv::lemma_product(m, n), "path sum vs product, " + at)) return;
        if (m > 1 && n > 1) {
          Polynomial step = lgv::e_weight(s, a, {m - 1, n}) * (x(n) - x(m + n - 1)) +
                            lgv::e_weight(s, a, {m, n - 1});
          if (!c.equal(e, step, "recurrence, " + at)) return;
        }
      }
    }
  });
}

CheckReport verify_corollary(int n_max, int m_max, bool corrupt_weights) {
  return run_check("corollary", {{"n_max", str(n_max)}, {"m_max", str(m_max)}},
                   [&](Checker& c) {
    if (m_max < 1) throw InvalidArgument("corollary: m_max must be >= 1");
    for (int n = 2; n <= n_max; ++n) {
      LatticeScheme open = LatticeScheme::schur_weighted(n, m_max);
      LatticeScheme cut = LatticeScheme::schur_weighted(n, m_max, n + 1);
      open.corrupted = cut.corrupted = corrupt_weights;
      for (int t = 1; t < n; ++t) {
        for (int m = 1; m <= m_max; ++m) {
          const std::string at = "t=" + str(t) + ", m=" + str(m) + ", n=" + str(n);
          if (!c.equal(lgv::e_weight(open, {1, t}, {m, n}), lgv::corollary_product(t, m, n),
                       "product form, " + at)) {
            return;
          }
          if (!c.equal(lgv::e_weight(cut, {1, t}, {m, n}), lgv::corollary_power(t, m, n),
                       "truncated power, " + at)) {
            return;
          }
        }
      }
    }
  });
}

CheckReport verify_vandermonde(int n, bool brute_force, bool corrupt_weights) {
  return run_check("vandermonde",
                   {{"n", str(n)}, {"brute_force", brute_force ? "true" : "false"}},
                   [&](Checker& c) {
    if (n < 1) throw InvalidArgument("vandermonde: n must be >= 1");
    LatticeScheme s = lgv::vandermonde_scheme(n);
    s.corrupted = corrupt_weights;
    const lgv::Endpoints ends = lgv::vandermonde_endpoints(n);
    const Polynomial product = symfun::vandermonde(n);

    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        auto e = lgv::e_weight(s, ends.sources[static_cast<std::size_t>(i - 1)],
                               ends.sinks[static_cast<std::size_t>(j - 1)]);
        Polynomial expected = n - j == 0 ? Polynomial(1)
                                         : Polynomial::variable(Variable::x(static_cast<std::uint32_t>(i)),
                                                                static_cast<std::uint32_t>(n - j));
        if (!c.equal(e, expected, "e(a_" + str(i) + ",b_" + str(j) + ") = x_i^{n-j}")) return;
      }
    }
    if (!c.equal(symfun::alternant(Partition{}, n), product, "det(x_i^{n-j}) vs product")) return;
    if (!c.equal(lgv::lgv_det(s, ends), product, "lgv determinant vs product")) return;
    if (brute_force) {
      auto sum = lgv::nonintersecting_sum(s, ends);
      c.param("systems", std::to_string(sum.systems));
      if (!c.expect(sum.systems == 1, "expected exactly one non-intersecting system, found " +
                                          std::to_string(sum.systems))) {
        return;
      }
      c.equal(sum.signed_sum, product, "signed path-system sum vs product");
    }
  });
}

CheckReport verify_jacobi_trudi(const Partition& lambda, int n, bool with_paths,
                                symfun::JacobiTrudiOrientation orientation) {
  Params params{{"shape", combinat::to_string(lambda)}, {"n", str(n)}};
  if (orientation == symfun::JacobiTrudiOrientation::AsPrinted) {
    params.emplace_back("orientation", "as-printed");
  }
  return run_check("jacobi-trudi", std::move(params), [&](Checker& c) {
    if (n < 1) throw InvalidArgument("jacobi-trudi: n must be >= 1");
    const Polynomial tableaux = schur_tableaux(lambda, n);
    if (!c.equal(symfun::jacobi_trudi(lambda, n, orientation), tableaux,
                 "det(h) vs tableau sum")) {
      return;
    }
    if (with_paths) {
      c.equal(lgv::schur_via_lgv(lambda, n), tableaux, "path systems vs tableau sum");
    }
  });
}

CheckReport verify_bialternant(const Partition& lambda, int n, bool with_paths) {
  return run_check("bialternant", {{"shape", combinat::to_string(lambda)}, {"n", str(n)}},
                   [&](Checker& c) {
    if (n < 1 || lambda.rows() > n) {
      throw InvalidArgument("bialternant: need n >= 1 and at most n rows");
    }
    const Polynomial tableaux = schur_tableaux(lambda, n);
    const Polynomial quotient = symfun::bialternant(lambda, n);
    if (!c.equal(quotient, tableaux, "alternant quotient vs tableau sum")) return;
    if (!with_paths) return;

    const Polynomial via_paths = lgv::schur_via_lgv(lambda, n);
    if (!c.equal(via_paths, tableaux, "path systems vs tableau sum")) return;

    const LatticeScheme s = lgv::bialternant_scheme(lambda, n);
    const auto ends = lgv::bialternant_endpoints(lambda, n);
    const auto det_of = [&](const std::vector<LatticePoint>& from,
                            const std::vector<LatticePoint>& to) {
      return symfun::det(lgv::weight_matrix(s, from, to));
    };
    const Polynomial shifted = det_of(ends.diagonal_sources, ends.sinks);
    const Polynomial triangle = det_of(ends.column_sources, ends.diagonal_sources);
    const Polynomial full = det_of(ends.column_sources, ends.sinks);

    if (!c.equal(shifted, via_paths, "det e(a'_i,b_j) vs path-system Schur")) return;
    if (!c.equal(full, triangle * shifted, "det e(a''_i,b_j) factorisation")) return;
    if (!c.equal(triangle, symfun::vandermonde(n), "det e(a''_i,a'_j) vs Vandermonde")) return;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const auto from = ends.column_sources[static_cast<std::size_t>(n - i)];
        const auto to = ends.sinks[static_cast<std::size_t>(n - j)];
        const int exponent = lambda.part(j) + n - j;
        Polynomial expected = exponent == 0
                                  ? Polynomial(1)
                                  : Polynomial::variable(Variable::x(static_cast<std::uint32_t>(i)),
                                                         static_cast<std::uint32_t>(exponent));
        if (!c.equal(lgv::e_weight(s, from, to), expected,
                     "e(a''_{n+1-i}, b_{n+1-j}) at i=" + str(i) + ", j=" + str(j) + " from " +
                         pt(from))) {
          return;
        }
      }
    }
    c.equal(full, symfun::alternant(lambda, n), "det e(a''_i,b_j) vs alternant");
  });
}

CheckReport verify_cauchy(int n, int degree_cap) {
  return run_check("cauchy", {{"n", str(n)}, {"degree_cap", str(degree_cap)}},
                   [&](Checker& c) {
    if (n < 1 || degree_cap < 0) throw InvalidArgument("cauchy: need n >= 1, degree_cap >= 0");
    if (n > kMaxCauchyN) {
      throw TooLarge("cauchy: n = " + str(n) + " exceeds the limit of " + str(kMaxCauchyN));
    }
    const auto partitions = partitions_up_to(degree_cap, n);
    if (partitions.size() > kMaxCauchyPartitions) {
      throw TooLarge("cauchy: " + std::to_string(partitions.size()) +
                     " partitions exceed the limit of " + std::to_string(kMaxCauchyPartitions));
    }
    const auto cap = static_cast<unsigned>(degree_cap);
    const auto bidegree_cap = [&](const Polynomial& p) {
      return ring::truncate_family_degree(ring::truncate_family_degree(p, Family::X, cap),
                                          Family::Y, cap);
    };

    // Each entry x_i^k y_j^k has total degree 2k.
    const LatticeScheme s = LatticeScheme::cauchy_doubled(n, 2 * cap);
    const lgv::Endpoints ends = lgv::cauchy_endpoints(n);
    const auto entries = lgv::weight_matrix(s, ends.sources, ends.sinks);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Polynomial series;
        for (unsigned k = 0; k <= cap; ++k) series += ring::pow(x(i) * y(j), k);
        if (!c.equal(entries(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)),
                     series, "e(a_" + str(i) + ",b_" + str(j) + ") vs geometric series")) {
          return;
        }
      }
    }
    const Polynomial lhs = bidegree_cap(symfun::det(entries, 2 * cap));

    Polynomial schur_sum;
    for (const auto& lambda : partitions) {
      Polynomial s_x = schur_tableaux(lambda, n);
      schur_sum += s_x * in_y(s_x);
    }
    const Polynomial vandermondes = symfun::vandermonde(n) * in_y(symfun::vandermonde(n));
    const Polynomial rhs = bidegree_cap(vandermondes * schur_sum);
    c.param("partitions", std::to_string(partitions.size()));

    for (unsigned d = 0; d <= cap; ++d) {
      if (!c.equal(ring::family_component(lhs, Family::X, d),
                   ring::family_component(rhs, Family::X, d),
                   "graded component of x-degree " + std::to_string(d))) {
        return;
      }
    }

    Polynomial product = vandermondes;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Polynomial series;
        for (unsigned k = 0; k <= cap; ++k) series += ring::pow(x(i) * y(j), k);
        product = bidegree_cap(product * series);
      }
    }
    c.equal(lhs, product, "determinant vs Vandermonde products times prod 1/(1 - x_i y_j)");
  });
}

CheckReport verify_dual_cauchy(int n, int m) {
  return run_check("dual-cauchy", {{"n", str(n)}, {"m", str(m)}}, [&](Checker& c) {
    if (n < 1 || m < 1) throw InvalidArgument("dual-cauchy: need n, m >= 1");
    Polynomial product = 1;
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) product *= Polynomial(1) + x(i) * y(j);
    }
    const auto box = partitions_in_box(n, m);
    Polynomial sum;
    for (const auto& lambda : box) {
      sum += schur_tableaux(lambda, n) * in_y(schur_tableaux(conjugate(lambda), m));
    }
    c.param("partitions", std::to_string(box.size()));
    c.equal(product, sum, "prod (1 + x_i y_j) vs sum S_lambda(x) S_lambda'(y)");
  });
}

CheckReport verify_dual_determinant(int n, int m) {
  return run_check("dual-determinant", {{"n", str(n)}, {"m", str(m)}}, [&](Checker& c) {
    if (n < 1 || m < 1) throw InvalidArgument("dual-determinant: need n, m >= 1");
    const int size = n + m;
    symfun::PolyMatrix matrix(static_cast<std::size_t>(size), static_cast<std::size_t>(size));
    for (int r = 1; r <= size; ++r) {
      const auto row = static_cast<std::size_t>(r - 1);
      for (int t = 1; t <= n; ++t) {
        matrix(row, static_cast<std::size_t>(t - 1)) = ring::pow(x(t), static_cast<unsigned>(size - r));
      }
      for (int s = 1; s <= m; ++s) {
        matrix(row, static_cast<std::size_t>(n + s - 1)) = ring::pow(-y(s), static_cast<unsigned>(r - 1));
      }
    }
    const Polynomial determinant = symfun::det(matrix);

    Polynomial product = symfun::vandermonde(n) * in_y(symfun::vandermonde(m));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= m; ++j) product *= Polynomial(1) + x(i) * y(j);
    }
    const int predicted = (m * (n + m - 1)) % 2 == 0 ? 1 : -1;
    int observed = 0;
    if (determinant == product) observed = 1;
    if (determinant == -product) observed = -1;
    c.param("epsilon", observed == 0 ? "none" : str(observed));
    if (!c.expect(observed != 0, "det(*) is not +-(Vandermonde products) * prod (1 + x_i y_j)")) {
      return;
    }
    if (!c.expect(observed == predicted, "sign " + str(observed) +
                                             " differs from (-1)^{m(n+m-1)} = " + str(predicted))) {
      return;
    }
    c.equal(determinant, observed > 0 ? product : -product, "det(*) vs signed product");
  });
}

CheckReport verify_factorial_schur(const Partition& lambda, int n) {
  return run_check("factorial-schur", {{"shape", combinat::to_string(lambda)}, {"n", str(n)}},
                   [&](Checker& c) {
    if (n < 1 || lambda.rows() > n) {
      throw InvalidArgument("factorial-schur: need n >= 1 and at most n rows");
    }
    const Polynomial tableaux = combinat::factorial_schur_tableaux(lambda, n);
    const Polynomial quotient = symfun::factorial_schur_quotient(lambda, n);
    if (!c.equal(tableaux, quotient, "tableau sum vs determinant quotient")) return;
    if (!c.equal(ring::substitute_zero(tableaux, Family::A, 1), schur_tableaux(lambda, n),
                 "tableau side at a = 0 vs Schur")) {
      return;
    }
    c.equal(ring::substitute_zero(quotient, Family::A, 1), symfun::bialternant(lambda, n),
            "quotient side at a = 0 vs bialternant");
  });
}

CheckReport verify_newton(int power) {
  return run_check("newton", {{"n", str(power)}}, [&](Checker& c) {
    if (power < 0) throw InvalidArgument("newton: power must be >= 0");
    const Polynomial t_power =
        power == 0 ? Polynomial(1)
                   : Polynomial::variable(Variable::t(), static_cast<std::uint32_t>(power));
    if (!c.equal(symfun::newton_expand(power), t_power, "Newton expansion vs t^n")) return;
    // Every table entry f[x_s..x_{s+k-1}] is h_{n-k+1} in those variables.
    for (int k = 1; k <= power + 1; ++k) {
      for (int start = 1; start + k - 1 <= power + 1; ++start) {
        Polynomial oracle = ring::substitute_family(
            symfun::complete_homogeneous(power - k + 1, k), Family::X, Family::X, start - 1);
        if (!c.equal(symfun::divided_difference_at(power, start, k), oracle,
                     "f[x_" + str(start) + "..x_" + str(start + k - 1) + "] vs h_" +
                         str(power - k + 1))) {
          return;
        }
      }
    }
  });
}

CheckReport verify_lgv_random(SchemeKind kind, int count, std::uint64_t seed) {
  return run_check("lgv-random",
                   {{"scheme", lgv::to_string(kind)}, {"configs", str(count)}},
                   [&](Checker& c) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(kind));
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto distinct_points = [&](int k, int col_lo, int col_hi, int row_lo, int row_hi) {
      std::vector<LatticePoint> pool;
      for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) pool.push_back({col, row});
      }
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(static_cast<std::size_t>(std::min<int>(k, static_cast<int>(pool.size()))));
      return pool;
    };
    std::size_t systems = 0;
    for (int trial = 0; trial < count; ++trial) {
      LatticeScheme s;
      lgv::Endpoints ends;
      const int k = uniform(1, 3);
      switch (kind) {
        case SchemeKind::JacobiTrudi:
        case SchemeKind::SchurWeighted: {
          const int rows = uniform(2, 4);
          const int cols = uniform(2, 4);
          if (kind == SchemeKind::JacobiTrudi) {
            s = LatticeScheme::jacobi_trudi(rows, cols);
          } else {
            std::optional<int> cut;
            if (uniform(0, 1) == 1) cut = rows + 1;
            s = LatticeScheme::schur_weighted(rows, cols, cut);
          }
          ends.sources = distinct_points(k, 1, (cols + 1) / 2, 1, (rows + 1) / 2);
          ends.sinks = distinct_points(static_cast<int>(ends.sources.size()), cols / 2 + 1, cols,
                                       rows / 2 + 1, rows);
          break;
        }
        case SchemeKind::CauchyDoubled: {
          const int n = uniform(1, 2);
          s = LatticeScheme::cauchy_doubled(n, static_cast<unsigned>(uniform(2, 4)));
          ends.sources = distinct_points(k, 1, s.col_bound, 1, n);
          ends.sinks = distinct_points(static_cast<int>(ends.sources.size()), 1, s.col_bound,
                                       n + 1, 2 * n);
          break;
        }
      }
      const auto brute = lgv::nonintersecting_sum(s, ends);
      systems += brute.systems;
      std::string where = "trial " + str(trial) + ", sources";
      for (auto p : ends.sources) where += " " + pt(p);
      where += ", sinks";
      for (auto p : ends.sinks) where += " " + pt(p);
      if (!c.equal(lgv::lgv_det(s, ends), brute.signed_sum, where)) return;
    }
    c.param("systems", std::to_string(systems));
  });
}

// ---------------------------------------------------------------------------
// Suite

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "main-lemma", "corollary",        "vandermonde",     "jacobi-trudi",
      "bialternant", "cauchy",          "dual-cauchy",     "dual-determinant",
      "factorial-schur", "newton",      "lgv-random"};
  return names;
}

SuiteConfig parse_suite_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("suite config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("suite config must be a JSON object");
  SuiteConfig config;
  const std::vector<std::pair<std::string, int*>> ints = {
      {"max_partition_size", &config.max_partition_size},
      {"max_n", &config.max_n},
      {"cauchy_cap", &config.cauchy_cap},
      {"dual_max", &config.dual_max},
      {"newton_max", &config.newton_max}};
  for (const auto& [key, value] : doc.items()) {
    auto slot = std::find_if(ints.begin(), ints.end(),
                             [&](const auto& entry) { return entry.first == key; });
    if (slot != ints.end()) {
      if (!value.is_number_integer() || value.get<long long>() < 0 ||
          value.get<long long>() > 64) {
        throw InvalidArgument("suite config: '" + key + "' must be an integer in [0, 64]");
      }
      *slot->second = value.get<int>();
    } else if (key == "only") {
      if (!value.is_array()) throw InvalidArgument("suite config: 'only' must be an array");
      std::vector<std::string> only;
      for (const auto& item : value) {
        if (!item.is_string()) throw InvalidArgument("suite config: 'only' holds strings");
        const auto name = item.get<std::string>();
        const auto& known = identity_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          throw InvalidArgument("suite config: unknown identity '" + name + "'");
        }
        only.push_back(name);
      }
      config.only = std::move(only);
    } else {
      throw InvalidArgument("suite config: unknown key '" + key + "'");
    }
  }
  return config;
}

std::vector<CheckReport> run_suite(const SuiteConfig& config) {
  std::vector<CheckReport> reports;
  auto wanted = [&](const std::string& name) {
    return !config.only ||
           std::find(config.only->begin(), config.only->end(), name) != config.only->end();
  };
  const auto orientation = config.corrupt_orientation
                               ? symfun::JacobiTrudiOrientation::AsPrinted
                               : symfun::JacobiTrudiOrientation::Standard;
  const bool corrupt = config.corrupt_weights;

  const int lemma_max = std::min(config.lemma_max, config.max_partition_size);
  if (wanted("main-lemma") && lemma_max >= 1) {
    reports.push_back(verify_main_lemma(lemma_max, lemma_max, corrupt));
  }
  if (wanted("corollary") && config.max_n >= 2 && config.corollary_m_max >= 1) {
    reports.push_back(verify_corollary(config.max_n, config.corollary_m_max, corrupt));
  }
  if (wanted("vandermonde")) {
    for (int n = 1; n <= config.vandermonde_max; ++n) {
      reports.push_back(verify_vandermonde(n, n <= config.vandermonde_brute_max, corrupt));
    }
  }
  if (wanted("jacobi-trudi")) {
    for (int n = 1; n <= config.max_n; ++n) {
      for (const auto& lambda : partitions_up_to(config.max_partition_size, n)) {
        const bool paths = lambda.size() <= config.path_max_size && n <= config.path_max_n;
        reports.push_back(verify_jacobi_trudi(lambda, n, paths, orientation));
      }
    }
  }
  if (wanted("bialternant")) {
    for (int n = 1; n <= config.max_n; ++n) {
      for (const auto& lambda : partitions_up_to(config.max_partition_size, n)) {
        const bool paths = lambda.size() <= config.path_max_size && n <= config.path_max_n;
        reports.push_back(verify_bialternant(lambda, n, paths));
      }
    }
  }
  if (wanted("cauchy")) {
    for (int n = 1; n <= config.cauchy_max_n; ++n) {
      reports.push_back(verify_cauchy(n, config.cauchy_cap));
    }
    if (config.cauchy_extended_cap > 0 && config.cauchy_max_n >= 1) {
      reports.push_back(verify_cauchy(config.cauchy_max_n + 1,
                                      std::min(config.cauchy_extended_cap, config.cauchy_cap)));
    }
  }
  if (wanted("dual-cauchy")) {
    for (int n = 1; n <= config.dual_max; ++n) {
      for (int m = 1; m <= config.dual_max; ++m) reports.push_back(verify_dual_cauchy(n, m));
    }
  }
  if (wanted("dual-determinant")) {
    for (int n = 1; n <= config.dual_max; ++n) {
      for (int m = 1; m <= config.dual_max; ++m) {
        if (n + m <= config.dual_determinant_max_sum) {
          reports.push_back(verify_dual_determinant(n, m));
        }
      }
    }
  }
  if (wanted("factorial-schur")) {
    const int max_n = std::min(config.factorial_max_n, config.max_n);
    const int max_size = std::min(config.factorial_max_size, config.max_partition_size);
    for (int n = 1; n <= max_n; ++n) {
      for (const auto& lambda : partitions_up_to(max_size, n)) {
        reports.push_back(verify_factorial_schur(lambda, n));
      }
    }
  }
  if (wanted("newton")) {
    for (int power = 0; power <= config.newton_max; ++power) {
      reports.push_back(verify_newton(power));
    }
  }
  if (wanted("lgv-random") && config.random_lgv_configs > 0) {
    for (auto kind : {SchemeKind::JacobiTrudi, SchemeKind::SchurWeighted,
                      SchemeKind::CauchyDoubled}) {
      reports.push_back(
          verify_lgv_random(kind, config.random_lgv_configs, config.random_seed));
    }
  }
  return reports;
}

bool all_verified(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.status == Status::Verified; });
}

// ---------------------------------------------------------------------------
// Rendering

std::string report_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.identity;
  if (!report.params.empty()) {
    out << " [";
    for (std::size_t i = 0; i < report.params.size(); ++i) {
      if (i) out << ", ";
      out << report.params[i].first << '=' << report.params[i].second;
    }
    out << ']';
  }
  out << ": " << to_string(report.status) << '\n';
  if (report.message) out << "  message: " << *report.message << '\n';
  if (report.lhs) out << "  lhs: " << *report.lhs << '\n';
  if (report.rhs) out << "  rhs: " << *report.rhs << '\n';
  return out.str();
}

namespace {

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  j["params"] = std::move(params);
  j["status"] = to_string(report.status);
  if (report.lhs) j["lhs"] = *report.lhs;
  if (report.rhs) j["rhs"] = *report.rhs;
  if (report.message) j["message"] = *report.message;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

}  // namespace

std::string report_json(const CheckReport& report, int indent) {
  return to_json(report).dump(indent);
}

std::string reports_json(const std::vector<CheckReport>& reports, int indent) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : reports) array.push_back(to_json(r));
  return array.dump(indent);
}

}  // namespace lgvsym::identities
