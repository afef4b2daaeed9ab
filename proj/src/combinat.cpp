#include "lgvsym/combinat.hpp"

#include "lgvsym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace lgvsym::combinat {

using ring::Monomial;
using ring::Variable;

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidArgument("partition part is negative");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  return (i >= 1 && i <= rows()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition parse_partition(std::string_view text) {
  auto bad = [&](const std::string& why) {
    return ParseError("partition '" + std::string(text) + "': " + why);
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw bad("expected the form [p1,p2,...]");
  }
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::stringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.size() > 6 ||
          !std::all_of(item.begin(), item.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw bad("parts must be non-negative integers");
      }
      parts.push_back(std::stoi(item));
    }
    if (body.back() == ',') throw bad("trailing comma");
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidArgument& e) {
    throw bad(e.what());
  }
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int c = 1; c <= lambda.part(1); ++c) {
    int len = 0;
    while (lambda.part(len + 1) >= c) ++len;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

namespace {

// Appends the partitions of `remaining` with parts <= max_part and at most
// `rows_left` rows, in lexicographically descending order.
void partitions_of(int remaining, int max_part, int rows_left,
                   std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_of(remaining - p, p, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<Partition> bounded_partitions(int max_size, int max_rows,
                                          int max_cols) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int s = 0; s <= max_size; ++s) {
    partitions_of(s, max_cols, max_rows, prefix, out);
  }
  return out;
}

}  // namespace

std::vector<Partition> partitions_in_box(int max_rows, int max_cols) {
  if (max_rows < 0 || max_cols < 0) {
    throw InvalidArgument("partitions_in_box: negative box");
  }
  return bounded_partitions(max_rows * max_cols, max_rows, max_cols);
}

std::vector<Partition> partitions_up_to(int max_size, int max_rows) {
  if (max_size < 0 || max_rows < 0) return {};
  return bounded_partitions(max_size, max_rows, max_size);
}

// ---------------------------------------------------------------------------
// Tableaux

Tableau::Tableau(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size()) {
    throw InvalidArgument("tableau entry count does not match its shape");
  }
}

int Tableau::at(int row, int col) const {
  int offset = 0;
  for (int r = 1; r < row; ++r) offset += shape_.part(r);
  return entries_[static_cast<std::size_t>(offset + col - 1)];
}

bool Tableau::is_semistandard(int n) const {
  for (int r = 1; r <= shape_.rows(); ++r) {
    for (int c = 1; c <= shape_.part(r); ++c) {
      int v = at(r, c);
      if (v < 1 || v > n) return false;
      if (c > 1 && at(r, c - 1) > v) return false;
      if (r > 1 && at(r - 1, c) >= v) return false;
    }
  }
  return true;
}

SsytStream::SsytStream(Partition shape, int n) : shape_(std::move(shape)), n_(n) {
  Partition conj = conjugate(shape_);
  for (int r = 1; r <= shape_.rows(); ++r) {
    row_start_.push_back(static_cast<int>(row_of_.size()));
    for (int c = 1; c <= shape_.part(r); ++c) {
      row_of_.push_back(r);
      col_of_.push_back(c);
      // Room for the strictly increasing letters still below in the column.
      ceiling_.push_back(n_ - (conj.part(c) - r));
    }
  }
  entries_.assign(row_of_.size(), 0);
  if (shape_.rows() > n_) done_ = true;
}

bool SsytStream::refill_from(std::size_t cell) {
  for (std::size_t k = cell; k < entries_.size(); ++k) {
    int r = row_of_[k];
    int c = col_of_[k];
    int lo = 1;
    if (c > 1) lo = std::max(lo, entries_[k - 1]);
    if (r > 1) {
      std::size_t above = static_cast<std::size_t>(row_start_[r - 2] + c - 1);
      lo = std::max(lo, entries_[above] + 1);
    }
    if (lo > ceiling_[k]) return false;
    entries_[k] = lo;
  }
  return true;
}

std::optional<Tableau> SsytStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!refill_from(0)) {
      done_ = true;
      return std::nullopt;
    }
    return Tableau(shape_, entries_);
  }
  for (std::size_t k = entries_.size(); k-- > 0;) {
    if (entries_[k] < ceiling_[k]) {
      ++entries_[k];
      if (refill_from(k + 1)) return Tableau(shape_, entries_);
    }
  }
  done_ = true;
  return std::nullopt;
}

SsytStream ssyt_enumerate(const Partition& lambda, int n) {
  return SsytStream(lambda, n);
}

Polynomial tableau_monomial(const Tableau& t) {
  std::vector<Monomial::Factor> factors;
  for (int v : t.entries()) {
    factors.emplace_back(Variable::x(static_cast<std::uint32_t>(v)), 1);
  }
  return Polynomial::term(Monomial(std::move(factors)), 1);
}

Polynomial schur_tableaux(const Partition& lambda, int n) {
  Polynomial sum;
  auto stream = ssyt_enumerate(lambda, n);
  while (auto t = stream.next()) sum += tableau_monomial(*t);
  return sum;
}

Polynomial factorial_tableau_weight(const Tableau& t) {
  Polynomial product = 1;
  const Partition& shape = t.shape();
  for (int r = 1; r <= shape.rows(); ++r) {
    for (int c = 1; c <= shape.part(r); ++c) {
      int letter = t.at(r, c);
      int shift_index = letter + c - r;
      if (shift_index < 1) {
        throw FactorialIndexError("factorial tableau weight: cell (" +
                                  std::to_string(r) + "," + std::to_string(c) +
                                  ") gives a-index " +
                                  std::to_string(shift_index));
      }
      product *= Polynomial::variable(Variable::x(static_cast<std::uint32_t>(letter))) -
                 Polynomial::variable(Variable::a(static_cast<std::uint32_t>(shift_index)));
    }
  }
  return product;
}

Polynomial factorial_schur_tableaux(const Partition& lambda, int n) {
  Polynomial sum;
  auto stream = ssyt_enumerate(lambda, n);
  while (auto t = stream.next()) sum += factorial_tableau_weight(*t);
  return sum;
}

}  // namespace lgvsym::combinat
