#pragma once

/**
 * @file lgv.hpp
 * @brief Weighted lattice graphs, path sums e(u, v), non-intersecting path
 * systems, and the Lindstrom-Gessel-Viennot determinant.
 *
 * Points are (col, row) with col horizontal and row vertical, both >= 1.
 * Every scheme works on a finite window of cols 1..col_bound and rows
 * 1..row_bound(); the window must be wide enough to hold every path that
 * contributes, which the preset constructors below guarantee.
 *
 * Edge weights by scheme (horizontal edge leaving column i in row j):
 *   JacobiTrudi    (i,j)->(i+1,j): x_j
 *   SchurWeighted  (i,j)->(i+1,j): x_j - x_{i+j}, with x_k = 0 for
 *                  k >= truncate_at when truncation is on
 *   CauchyDoubled  rows 1..2n; rows j <= n as SchurWeighted truncated at
 *                  n+1; rows j >= n+1 run leftward, (i+1,j)->(i,j) with
 *                  weight y_{2n+1-j} - y_{i+2n+1-j}, y truncated at n+1
 * Vertical edges (i,j)->(i,j+1) always weigh 1.
 */

#include "lgvsym/combinat.hpp"
#include "lgvsym/ring.hpp"
#include "lgvsym/symfun.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lgvsym::lgv {

using combinat::Partition;
using ring::Polynomial;
using symfun::PolyMatrix;

struct LatticePoint {
  int col = 1;
  int row = 1;
  auto operator<=>(const LatticePoint&) const = default;
};

std::string to_string(LatticePoint p);

enum class SchemeKind { JacobiTrudi, SchurWeighted, CauchyDoubled };

std::string to_string(SchemeKind kind);

struct LatticeScheme {
  SchemeKind kind = SchemeKind::JacobiTrudi;
  int n = 1;
  std::optional<int> truncate_at;
  int col_bound = 1;
  std::optional<unsigned> degree_cap;
  // Negative-control hook: shifts the subtracted (or, for JacobiTrudi, the
  // only) variable index of every horizontal weight up by one.
  bool corrupted = false;

  static LatticeScheme jacobi_trudi(int n, int col_bound);
  static LatticeScheme schur_weighted(int n, int col_bound,
                                      std::optional<int> truncate_at = std::nullopt);
  // col_bound defaults to degree_cap + 1.
  static LatticeScheme cauchy_doubled(int n, unsigned degree_cap,
                                      std::optional<int> col_bound = std::nullopt);

  int row_bound() const { return kind == SchemeKind::CauchyDoubled ? 2 * n : n; }
  bool contains(LatticePoint p) const;
  // Whether horizontal edges in this row run right (true) or left.
  bool rightward(int row) const;
};

struct Edge {
  LatticePoint to;
  Polynomial weight;
};

// Horizontal edge first, then vertical; edges leaving the window are omitted.
std::vector<Edge> out_edges(const LatticeScheme& scheme, LatticePoint from);

// Every window point, ordered so that each edge goes forward.
std::vector<LatticePoint> topological_order(const LatticeScheme& scheme);

struct LatticePath {
  std::vector<LatticePoint> vertices;
  Polynomial weight;
};

// Path t runs from A[t] to B[sigma[t]].
struct PathSystem {
  std::vector<LatticePath> paths;
  std::vector<std::size_t> sigma;
  int sign = 1;
};

struct Endpoints {
  std::vector<LatticePoint> sources;
  std::vector<LatticePoint> sinks;
};

// Sum of path weights from a to b by dynamic programming over the window;
// 1 if a == b, 0 if b is unreachable. Throws OutOfBounds.
Polynomial e_weight(const LatticeScheme& scheme, LatticePoint a, LatticePoint b);

// Number of directed paths from a to b, saturating at UINT64_MAX.
std::uint64_t path_count(const LatticeScheme& scheme, LatticePoint a, LatticePoint b);

// Lazy depth-first stream of all paths from a to b in a fixed order.
class PathStream {
 public:
  PathStream(LatticeScheme scheme, LatticePoint a, LatticePoint b);
  std::optional<LatticePath> next();

 private:
  struct Frame {
    LatticePoint at;
    std::vector<Edge> edges;
    std::size_t next_edge = 0;
  };
  bool useful(LatticePoint p) const;

  LatticeScheme scheme_;
  LatticePoint target_;
  std::vector<char> reaches_target_;  // row-major over the window
  std::vector<Frame> stack_;
  std::vector<Polynomial> prefix_weights_;
  bool started_ = false;
};

PathStream enumerate_paths(const LatticeScheme& scheme, LatticePoint a, LatticePoint b);

// (x_1 - x_{m+n-1}) ... (x_1 - x_{n+1}); 1 when m = 1.
Polynomial lemma_product(int m, int n);

// (x_t - x_{m+n-1}) ... (x_t - x_{n+1}), the path sum from (1,t) to (m,n).
Polynomial corollary_product(int t, int m, int n);

// x_t^{m-1}: the path sum from (1,t) to (m,n) once x_{n+1} = x_{n+2} = ... = 0.
Polynomial corollary_power(int t, int m, int n);

// Single-pair path counts above this refuse brute-force enumeration.
inline constexpr std::uint64_t kMaxPairPaths = 1'000'000;

struct NonintersectingSum {
  Polynomial signed_sum;
  std::size_t systems = 0;
  std::size_t non_identity_systems = 0;
};

// Calls `visit` for every tuple of pairwise vertex-disjoint paths, over all
// permutations of the sinks. Throws TooLarge if some pair has more than
// max_pair_paths paths, InvalidArgument if the lists differ in length.
void for_each_system(const LatticeScheme& scheme, const Endpoints& ends,
                     const std::function<void(const PathSystem&)>& visit,
                     std::uint64_t max_pair_paths = kMaxPairPaths);

NonintersectingSum nonintersecting_sum(const LatticeScheme& scheme, const Endpoints& ends,
                                       std::uint64_t max_pair_paths = kMaxPairPaths);

std::vector<PathSystem> nonintersecting_systems(const LatticeScheme& scheme,
                                                const Endpoints& ends,
                                                std::uint64_t max_pair_paths = kMaxPairPaths);

// [e(a_i, b_j)].
PolyMatrix weight_matrix(const LatticeScheme& scheme, const std::vector<LatticePoint>& from,
                         const std::vector<LatticePoint>& to);

Polynomial lgv_det(const LatticeScheme& scheme, const Endpoints& ends);

// Sources (i,1), sinks b_i = (i + lambda_{n+1-i}, n).
Endpoints schur_endpoints(const Partition& lambda, int n);

// JacobiTrudi scheme wide enough for schur_endpoints.
LatticeScheme schur_scheme(const Partition& lambda, int n);

// Sum over non-intersecting systems on the JacobiTrudi graph. Every system
// found must pair sources with sinks in order; anything else throws
// std::logic_error. 0 when lambda has more than n rows.
Polynomial schur_via_lgv(const Partition& lambda, int n);

// Sources (1,i), sinks b_j = (n+1-j, n).
Endpoints vandermonde_endpoints(int n);

// SchurWeighted truncated at n+1, window n wide.
LatticeScheme vandermonde_scheme(int n);

struct BialternantEndpoints {
  std::vector<LatticePoint> column_sources;    // a''_i = (1, n-i+1)
  std::vector<LatticePoint> diagonal_sources;  // a'_i  = (i, n-i+1)
  std::vector<LatticePoint> sinks;             // b_i as in schur_endpoints
};

BialternantEndpoints bialternant_endpoints(const Partition& lambda, int n);

// SchurWeighted truncated at n+1, wide enough for bialternant_endpoints.
LatticeScheme bialternant_scheme(const Partition& lambda, int n);

// Sources a_i = (1,i), sinks b_j = (1, 2n+1-j).
Endpoints cauchy_endpoints(int n);

// e(a_i, b_j) on the doubled graph with the given total-degree cap.
Polynomial cauchy_entry(int n, int i, int j, unsigned degree_cap);

// Draws each system as its own panel: grid dots, labelled sources and
// sinks, one polyline per path.
std::string render_svg(const LatticeScheme& scheme, const Endpoints& ends,
                       const std::vector<PathSystem>& systems);

}  // namespace lgvsym::lgv
