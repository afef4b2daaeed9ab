#pragma once

/**
 * @file identities.hpp
 * @brief Executable checks of the lattice-path identities.
 *
 * Each verifier computes the two sides of an identity along independent
 * routes (tableau enumeration, determinants, path dynamic programming,
 * brute-force path systems) and returns a CheckReport. Failures never throw:
 * a false equality is a MISMATCH report and a library exception is an ERROR
 * report carrying the exception text.
 *
 * Every symbolic equality that holds is also re-checked by evaluating both
 * sides at ten pseudo-random integer points in [-9, 9] (fixed seed).
 */

#include "lgvsym/combinat.hpp"
#include "lgvsym/lgv.hpp"
#include "lgvsym/symfun.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lgvsym::identities {

using combinat::Partition;

enum class Status { Verified, Mismatch, Error };

std::string to_string(Status s);

struct CheckReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Verified;
  // Both present on MISMATCH: each side restricted to the first 50
  // monomials (descending graded-lex) where the sides differ.
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;
  // Which sub-check failed, or the exception text for ERROR.
  std::optional<std::string> message;
  std::int64_t elapsed_ms = 0;
};

// e((1,1),(m,n)) against the closed product for all m <= m_max, n <= n_max,
// plus the one-step recurrence through (m-1,n) and (m,n-1).
CheckReport verify_main_lemma(int m_max, int n_max, bool corrupt_weights = false);

// Path sums from (1,t) to (m,n) for 1 <= t < n <= n_max, m <= m_max: the
// product form without truncation and x_t^{m-1} with x_{n+1} = ... = 0.
CheckReport verify_corollary(int n_max, int m_max, bool corrupt_weights = false);

// det(x_i^{n-j}) = lgv_det = prod_{i<j}(x_i - x_j), entries e(a_i,b_j) =
// x_i^{n-j}; with brute_force also the signed path-system sum and the
// uniqueness of the non-intersecting system.
CheckReport verify_vandermonde(int n, bool brute_force, bool corrupt_weights = false);

CheckReport verify_jacobi_trudi(const Partition& lambda, int n, bool with_paths,
                                symfun::JacobiTrudiOrientation orientation =
                                    symfun::JacobiTrudiOrientation::Standard);

// bialternant = tableau sum; with_paths adds the path-system Schur
// polynomial and the determinant chain through the a' and a'' sources.
CheckReport verify_bialternant(const Partition& lambda, int n, bool with_paths);

// Graded comparison in the ring truncated at x-degree and y-degree
// `degree_cap`.
CheckReport verify_cauchy(int n, int degree_cap);

CheckReport verify_dual_cauchy(int n, int m);

// Records the global sign as param "epsilon" and checks it against
// (-1)^{m(n+m-1)}.
CheckReport verify_dual_determinant(int n, int m);

CheckReport verify_factorial_schur(const Partition& lambda, int n);

CheckReport verify_newton(int power);

// det = signed brute-force sum on `count` pseudo-random configurations.
// Both sides see the same weights, so the weight-corruption hook does not
// apply here.
CheckReport verify_lgv_random(lgv::SchemeKind kind, int count, std::uint64_t seed);

// The identity names accepted by `only` filters and the CLI.
const std::vector<std::string>& identity_names();

struct SuiteConfig {
  int max_partition_size = 6;
  int max_n = 4;
  int cauchy_cap = 4;
  int dual_max = 3;
  int newton_max = 8;
  std::optional<std::vector<std::string>> only;

  int lemma_max = 6;
  int corollary_m_max = 5;
  int vandermonde_max = 5;
  int vandermonde_brute_max = 3;
  int path_max_size = 4;
  int path_max_n = 3;
  int cauchy_max_n = 2;
  // n = cauchy_max_n + 1 runs with this cap; 0 turns it off.
  int cauchy_extended_cap = 3;
  int dual_determinant_max_sum = 5;
  int factorial_max_size = 4;
  int factorial_max_n = 3;
  int random_lgv_configs = 20;
  std::uint64_t random_seed = 20240611;

  // Negative-control hooks.
  bool corrupt_weights = false;
  bool corrupt_orientation = false;
};

// Reads {"max_partition_size", "max_n", "cauchy_cap", "dual_max",
// "newton_max", "only"}; every key optional, nothing else allowed.
// Throws InvalidArgument.
SuiteConfig parse_suite_config(std::string_view json_text);

std::vector<CheckReport> run_suite(const SuiteConfig& config);

bool all_verified(const std::vector<CheckReport>& reports);

std::string report_text(const CheckReport& report);

// {"identity", "params", "status", "lhs"?, "rhs"?, "message"?, "elapsed_ms"}
std::string report_json(const CheckReport& report, int indent = -1);
std::string reports_json(const std::vector<CheckReport>& reports, int indent = 2);

}  // namespace lgvsym::identities
