#pragma once

#include "lgvsym/ring.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgvsym::combinat {

using ring::Polynomial;

// Weakly decreasing tuple of non-negative integers, stored without trailing
// zeros. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidArgument if the parts are negative or increase somewhere.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int rows() const { return static_cast<int>(parts_.size()); }
  // lambda_i with 1-based i; zero past the last row.
  int part(int i) const;
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// "[2,1]" <-> Partition; "[]" is the empty partition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& lambda);

Partition conjugate(const Partition& lambda);

// Partitions fitting in a box of max_rows rows and max_cols columns, ordered
// by size, then lexicographically descending ((2) before (1,1)).
std::vector<Partition> partitions_in_box(int max_rows, int max_cols);

// Partitions of size <= max_size with at most max_rows rows, same order.
std::vector<Partition> partitions_up_to(int max_size, int max_rows);

// Semistandard filling of a shape. Cells are addressed (row, column), both
// 1-based, English notation.
class Tableau {
 public:
  Tableau(Partition shape, std::vector<int> entries);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& entries() const { return entries_; }
  int at(int row, int col) const;

  // Rows weakly increasing, columns strictly increasing, letters in 1..n.
  bool is_semistandard(int n) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<int> entries_;  // row-major
};

// Lazy stream of the semistandard tableaux of a shape over the alphabet
// 1..n, in row-major lexicographic order: the first tableau puts the
// smallest legal letter in every cell, and each step advances the last cell
// that can still grow and refills everything after it minimally.
class SsytStream {
 public:
  SsytStream(Partition shape, int n);

  // Next tableau, or nullopt once exhausted.
  std::optional<Tableau> next();

 private:
  bool refill_from(std::size_t cell);

  Partition shape_;
  int n_;
  std::vector<int> row_of_;     // per cell
  std::vector<int> col_of_;     // per cell
  std::vector<int> ceiling_;    // largest letter a cell can take
  std::vector<int> entries_;
  std::vector<int> row_start_;  // cell index of (row, 1)
  bool started_ = false;
  bool done_ = false;
};

SsytStream ssyt_enumerate(const Partition& lambda, int n);

// x^T = x_1^{N_1} ... x_n^{N_n}.
Polynomial tableau_monomial(const Tableau& t);

// Sum of x^T over all semistandard tableaux; 1 for the empty shape, 0 when
// the shape has more than n rows.
Polynomial schur_tableaux(const Partition& lambda, int n);

// Product over cells of (x_{T(r,c)} - a_{T(r,c) + c - r}).
Polynomial factorial_tableau_weight(const Tableau& t);

Polynomial factorial_schur_tableaux(const Partition& lambda, int n);

}  // namespace lgvsym::combinat
