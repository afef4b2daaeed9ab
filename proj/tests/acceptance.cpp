// Acceptance run: one PASS/FAIL line per criterion, each under its time limit.

#include "lgvsym/identities.hpp"
#include "lgvsym/ring.hpp"
#include "support/random_poly.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace lgvsym;
using namespace lgvsym::identities;
using combinat::partitions_up_to;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::size_t checks = 0;
};

// Folds a report into the outcome, keeping the first failure.
void take(Outcome& o, const CheckReport& r, Status expected = Status::Verified) {
  ++o.checks;
  if (r.status != expected && o.ok) {
    o.ok = false;
    std::string text = report_text(r);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    o.detail = text;
  }
}

struct Timed {
  double limit_s;
  std::function<Outcome()> body;
};

bool criterion(int number, const std::string& title, const std::vector<Timed>& parts) {
  bool ok = true;
  std::ostringstream detail;
  std::size_t checks = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto start = Clock::now();
    Outcome o = parts[i].body();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    checks += o.checks;
    if (i) detail << "; ";
    detail << std::fixed << std::setprecision(2) << seconds << "s/" << parts[i].limit_s << "s";
    if (!o.ok) {
      ok = false;
      detail << " [" << o.detail << "]";
    }
    if (seconds > parts[i].limit_s) {
      ok = false;
      detail << " [over time limit]";
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << number << ". " << title << " ("
            << checks << " checks, " << detail.str() << ")" << std::endl;
  return ok;
}

Outcome ring_laws(int cases) {
  using ring::Polynomial;
  testing::RandomPolynomials gen(20240611);
  Outcome o;
  for (int k = 0; k < cases; ++k) {
    const Polynomial p = gen.polynomial();
    const Polynomial q = gen.polynomial();
    const Polynomial r = gen.polynomial();
    ++o.checks;
    const bool holds = p + q == q + p && p * q == q * p && (p + q) + r == p + (q + r) &&
                       (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r &&
                       (p - p).is_zero() && ring::parse_polynomial(ring::canonical_text(p)) == p &&
                       (q.is_zero() || ring::exact_div(p * q, q) == p);
    if (!holds) {
      o.ok = false;
      o.detail = "ring law failed for p = " + ring::canonical_text(p) +
                 ", q = " + ring::canonical_text(q) + ", r = " + ring::canonical_text(r);
      break;
    }
  }
  return o;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  bool all = true;
  const lgv::SchemeKind kinds[] = {lgv::SchemeKind::JacobiTrudi, lgv::SchemeKind::SchurWeighted,
                                   lgv::SchemeKind::CauchyDoubled};

  all &= criterion(1, "main lemma, 1 <= m, n <= 6", {{5, [] {
    Outcome o;
    take(o, verify_main_lemma(6, 6));
    return o;
  }}});

  all &= criterion(2, "truncated path sums x_t^{m-1}, t < n <= 4, m <= 5", {{5, [] {
    Outcome o;
    take(o, verify_corollary(4, 5));
    return o;
  }}});

  all &= criterion(3, "Vandermonde: brute force n <= 3, determinant n <= 5", {{30, [] {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
      const auto r = verify_vandermonde(n, n <= 3);
      take(o, r);
    }
    return o;
  }}});

  all &= criterion(4, "Schur four ways, |lambda| <= 6, n <= 4", {{120, [] {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lambda : partitions_up_to(6, n)) {
        const bool paths = lambda.size() <= 4 && n <= 3;
        take(o, verify_jacobi_trudi(lambda, n, paths));
        take(o, verify_bialternant(lambda, n, false));
      }
    }
    return o;
  }}});

  all &= criterion(5, "determinant chain through a' and a'', |lambda| <= 4, n <= 3", {{30, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      for (const auto& lambda : partitions_up_to(4, n)) take(o, verify_bialternant(lambda, n, true));
    }
    return o;
  }}});

  all &= criterion(6, "Cauchy, graded to degree 4 (n <= 2) and 3 (n = 3)", {{60, [] {
    Outcome o;
    take(o, verify_cauchy(1, 4));
    take(o, verify_cauchy(2, 4));
    take(o, verify_cauchy(3, 3));
    return o;
  }}});

  all &= criterion(7, "dual Cauchy n, m <= 3; determinant sign n + m <= 5",
                   {{30,
                     [] {
                       Outcome o;
                       for (int n = 1; n <= 3; ++n) {
                         for (int m = 1; m <= 3; ++m) take(o, verify_dual_cauchy(n, m));
                       }
                       return o;
                     }},
                    {30, [] {
                       Outcome o;
                       for (int n = 1; n <= 4; ++n) {
                         for (int m = 1; n + m <= 5; ++m) take(o, verify_dual_determinant(n, m));
                       }
                       return o;
                     }}});

  all &= criterion(8, "factorial Schur, |lambda| <= 4, n <= 3", {{30, [] {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
      for (const auto& lambda : partitions_up_to(4, n)) take(o, verify_factorial_schur(lambda, n));
    }
    return o;
  }}});

  all &= criterion(9, "Newton expansion n <= 8, divided differences vs h_k", {{5, [] {
    Outcome o;
    for (int n = 0; n <= 8; ++n) take(o, verify_newton(n));
    return o;
  }}});

  all &= criterion(10, "1000 ring-law cases; 20 random LGV configurations per scheme", {{60, [&] {
    Outcome o = ring_laws(1000);
    for (auto kind : kinds) take(o, verify_lgv_random(kind, 20, 20240611));
    return o;
  }}});

  all &= criterion(11, "negative controls produce MISMATCH", {{30, [&] {
    Outcome o;
    take(o, verify_main_lemma(6, 6, true), Status::Mismatch);
    take(o, verify_corollary(4, 5, true), Status::Mismatch);
    take(o, verify_vandermonde(3, true, true), Status::Mismatch);
    take(o, verify_jacobi_trudi(combinat::Partition({2, 1}), 3, false,
                                symfun::JacobiTrudiOrientation::AsPrinted),
         Status::Mismatch);
    SuiteConfig weights;
    weights.corrupt_weights = true;
    SuiteConfig orientation;
    orientation.corrupt_orientation = true;
    for (const auto* config : {&weights, &orientation}) {
      ++o.checks;
      if (all_verified(run_suite(*config)) && o.ok) {
        o.ok = false;
        o.detail = "a corrupted suite run came back all VERIFIED";
      }
    }
    return o;
  }}});

  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " in " << std::fixed << std::setprecision(2)
            << total << "s" << std::endl;
  return all ? 0 : 1;
}
