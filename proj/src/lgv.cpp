#include "lgvsym/lgv.hpp"

#include "lgvsym/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lgvsym::lgv {

using ring::Variable;

std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.col) + "," + std::to_string(p.row) + ")";
}

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::JacobiTrudi: return "jacobi-trudi";
    case SchemeKind::SchurWeighted: return "schur-weighted";
    case SchemeKind::CauchyDoubled: return "cauchy-doubled";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Schemes and edges

LatticeScheme LatticeScheme::jacobi_trudi(int n, int col_bound) {
  LatticeScheme s;
  s.kind = SchemeKind::JacobiTrudi;
  s.n = n;
  s.col_bound = col_bound;
  return s;
}

LatticeScheme LatticeScheme::schur_weighted(int n, int col_bound,
                                            std::optional<int> truncate_at) {
  LatticeScheme s;
  s.kind = SchemeKind::SchurWeighted;
  s.n = n;
  s.col_bound = col_bound;
  s.truncate_at = truncate_at;
  return s;
}

LatticeScheme LatticeScheme::cauchy_doubled(int n, unsigned degree_cap,
                                            std::optional<int> col_bound) {
  LatticeScheme s;
  s.kind = SchemeKind::CauchyDoubled;
  s.n = n;
  s.truncate_at = n + 1;
  s.degree_cap = degree_cap;
  s.col_bound = col_bound.value_or(static_cast<int>(degree_cap) + 1);
  return s;
}

bool LatticeScheme::contains(LatticePoint p) const {
  return p.col >= 1 && p.col <= col_bound && p.row >= 1 && p.row <= row_bound();
}

bool LatticeScheme::rightward(int row) const {
  return kind != SchemeKind::CauchyDoubled || row <= n;
}

namespace {

Polynomial truncated(const LatticeScheme& s, Variable v) {
  if (s.truncate_at && v.index >= static_cast<std::uint32_t>(*s.truncate_at)) return 0;
  return Polynomial::variable(v);
}

Polynomial x_weight(const LatticeScheme& s, int k) {
  return truncated(s, Variable::x(static_cast<std::uint32_t>(k)));
}

Polynomial y_weight(const LatticeScheme& s, int k) {
  return truncated(s, Variable::y(static_cast<std::uint32_t>(k)));
}

std::size_t cell(const LatticeScheme& s, LatticePoint p) {
  return static_cast<std::size_t>(p.row - 1) * static_cast<std::size_t>(s.col_bound) +
         static_cast<std::size_t>(p.col - 1);
}

std::size_t window_size(const LatticeScheme& s) {
  return static_cast<std::size_t>(s.col_bound) * static_cast<std::size_t>(s.row_bound());
}

void require_inside(const LatticeScheme& s, LatticePoint p) {
  if (!s.contains(p)) {
    throw OutOfBounds("point " + to_string(p) + " lies outside the " + to_string(s.kind) +
                      " window of " + std::to_string(s.col_bound) + " columns and " +
                      std::to_string(s.row_bound()) + " rows");
  }
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

}  // namespace

std::vector<Edge> out_edges(const LatticeScheme& s, LatticePoint from) {
  std::vector<Edge> edges;
  const int i = from.col;
  const int j = from.row;
  const int shift = s.corrupted ? 1 : 0;
  switch (s.kind) {
    case SchemeKind::JacobiTrudi:
      if (i + 1 <= s.col_bound) edges.push_back({{i + 1, j}, x_weight(s, j + shift)});
      break;
    case SchemeKind::SchurWeighted:
      if (i + 1 <= s.col_bound) {
        edges.push_back({{i + 1, j}, x_weight(s, j) - x_weight(s, i + j + shift)});
      }
      break;
    case SchemeKind::CauchyDoubled:
      if (j <= s.n) {
        if (i + 1 <= s.col_bound) {
          edges.push_back({{i + 1, j}, x_weight(s, j) - x_weight(s, i + j + shift)});
        }
      } else if (i >= 2) {
        // Edge (i'+1, j) -> (i', j) with i' = i - 1.
        const int mirrored = 2 * s.n + 1 - j;
        edges.push_back({{i - 1, j},
                         y_weight(s, mirrored) - y_weight(s, (i - 1) + mirrored + shift)});
      }
      break;
  }
  if (j + 1 <= s.row_bound()) edges.push_back({{i, j + 1}, Polynomial(1)});
  return edges;
}

std::vector<LatticePoint> topological_order(const LatticeScheme& s) {
  std::vector<LatticePoint> order;
  order.reserve(window_size(s));
  for (int row = 1; row <= s.row_bound(); ++row) {
    if (s.rightward(row)) {
      for (int col = 1; col <= s.col_bound; ++col) order.push_back({col, row});
    } else {
      for (int col = s.col_bound; col >= 1; --col) order.push_back({col, row});
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// Path sums

Polynomial e_weight(const LatticeScheme& s, LatticePoint a, LatticePoint b) {
  require_inside(s, a);
  require_inside(s, b);
  std::vector<Polynomial> value(window_size(s));
  std::vector<char> reached(window_size(s), 0);
  value[cell(s, a)] = 1;
  reached[cell(s, a)] = 1;
  for (LatticePoint v : topological_order(s)) {
    if (!reached[cell(s, v)]) continue;
    if (v == b) break;
    const Polynomial& here = value[cell(s, v)];
    for (const Edge& e : out_edges(s, v)) {
      value[cell(s, e.to)] += ring::mul(here, e.weight, s.degree_cap);
      reached[cell(s, e.to)] = 1;
    }
  }
  return value[cell(s, b)];
}

std::uint64_t path_count(const LatticeScheme& s, LatticePoint a, LatticePoint b) {
  require_inside(s, a);
  require_inside(s, b);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> count(window_size(s), 0);
  count[cell(s, a)] = 1;
  for (LatticePoint v : topological_order(s)) {
    std::uint64_t here = count[cell(s, v)];
    if (here == 0) continue;
    if (v == b) break;
    for (const Edge& e : out_edges(s, v)) {
      std::uint64_t& there = count[cell(s, e.to)];
      there = (there > kMax - here) ? kMax : there + here;
    }
  }
  return count[cell(s, b)];
}

PathStream::PathStream(LatticeScheme scheme, LatticePoint a, LatticePoint b)
    : scheme_(std::move(scheme)), target_(b) {
  require_inside(scheme_, a);
  require_inside(scheme_, b);
  reaches_target_.assign(window_size(scheme_), 0);
  reaches_target_[cell(scheme_, b)] = 1;
  auto order = topological_order(scheme_);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (const Edge& e : out_edges(scheme_, *it)) {
      if (reaches_target_[cell(scheme_, e.to)]) reaches_target_[cell(scheme_, *it)] = 1;
    }
  }
  stack_.push_back({a, {}, 0});
}

bool PathStream::useful(LatticePoint p) const {
  return reaches_target_[cell(scheme_, p)] != 0;
}

std::optional<LatticePath> PathStream::next() {
  auto emit = [this] {
    LatticePath path;
    for (const Frame& f : stack_) path.vertices.push_back(f.at);
    path.weight = prefix_weights_.back();
    return path;
  };
  if (!started_) {
    started_ = true;
    LatticePoint start = stack_.front().at;
    if (!useful(start)) {
      stack_.clear();
      return std::nullopt;
    }
    prefix_weights_.push_back(1);
    if (start == target_) return emit();
    stack_.front().edges = out_edges(scheme_, start);
  }
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.at == target_ || top.next_edge == top.edges.size()) {
      stack_.pop_back();
      prefix_weights_.pop_back();
      continue;
    }
    const Edge& e = top.edges[top.next_edge++];
    if (!useful(e.to)) continue;
    prefix_weights_.push_back(ring::mul(prefix_weights_.back(), e.weight, scheme_.degree_cap));
    LatticePoint to = e.to;
    stack_.push_back({to, to == target_ ? std::vector<Edge>{} : out_edges(scheme_, to), 0});
    if (to == target_) return emit();
  }
  return std::nullopt;
}

PathStream enumerate_paths(const LatticeScheme& scheme, LatticePoint a, LatticePoint b) {
  return PathStream(scheme, a, b);
}

// ---------------------------------------------------------------------------
// Closed forms

Polynomial corollary_product(int t, int m, int n) {
  if (t < 1 || m < 1 || n < 1) throw InvalidArgument("corollary_product: indices must be >= 1");
  Polynomial product = 1;
  const Polynomial xt = Polynomial::variable(Variable::x(static_cast<std::uint32_t>(t)));
  for (int k = n + 1; k <= m + n - 1; ++k) {
    product *= xt - Polynomial::variable(Variable::x(static_cast<std::uint32_t>(k)));
  }
  return product;
}

Polynomial lemma_product(int m, int n) { return corollary_product(1, m, n); }

Polynomial corollary_power(int t, int m, int n) {
  if (t < 1 || m < 1 || n < t) throw InvalidArgument("corollary_power: need 1 <= t <= n, m >= 1");
  if (m == 1) return 1;
  return Polynomial::variable(Variable::x(static_cast<std::uint32_t>(t)),
                              static_cast<std::uint32_t>(m - 1));
}

// ---------------------------------------------------------------------------
// Non-intersecting systems

namespace {

class VertexSet {
 public:
  explicit VertexSet(std::size_t size) : words_((size + 63) / 64, 0) {}
  void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool disjoint(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return false;
    }
    return true;
  }
  void merge(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  void remove(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Candidate {
  LatticePath path;
  VertexSet vertices;
};

}  // namespace

void for_each_system(const LatticeScheme& s, const Endpoints& ends,
                     const std::function<void(const PathSystem&)>& visit,
                     std::uint64_t max_pair_paths) {
  const std::size_t k = ends.sources.size();
  if (ends.sinks.size() != k) {
    throw InvalidArgument("for_each_system: " + std::to_string(k) + " sources but " +
                          std::to_string(ends.sinks.size()) + " sinks");
  }
  // candidates[i][j]: the paths from source i to sink j.
  std::vector<std::vector<std::vector<Candidate>>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    candidates[i].resize(k);
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t count = path_count(s, ends.sources[i], ends.sinks[j]);
      if (count > max_pair_paths) {
        throw TooLarge("brute-force enumeration refused: " + std::to_string(count) +
                       " paths from " + to_string(ends.sources[i]) + " to " +
                       to_string(ends.sinks[j]) + " exceed the limit of " +
                       std::to_string(max_pair_paths));
      }
      auto stream = enumerate_paths(s, ends.sources[i], ends.sinks[j]);
      while (auto path = stream.next()) {
        VertexSet vs(window_size(s));
        for (LatticePoint p : path->vertices) vs.insert(cell(s, p));
        candidates[i][j].push_back({std::move(*path), std::move(vs)});
      }
    }
  }

  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<const Candidate*> chosen(k, nullptr);
  VertexSet used(window_size(s));
  do {
    const int sign = permutation_sign(sigma);
    auto extend = [&](auto&& self, std::size_t t) -> void {
      if (t == k) {
        PathSystem system;
        system.sigma = sigma;
        system.sign = sign;
        for (const Candidate* c : chosen) system.paths.push_back(c->path);
        visit(system);
        return;
      }
      for (const Candidate& c : candidates[t][sigma[t]]) {
        if (!used.disjoint(c.vertices)) continue;
        used.merge(c.vertices);
        chosen[t] = &c;
        self(self, t + 1);
        used.remove(c.vertices);
      }
    };
    extend(extend, 0);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

NonintersectingSum nonintersecting_sum(const LatticeScheme& s, const Endpoints& ends,
                                       std::uint64_t max_pair_paths) {
  NonintersectingSum result;
  for_each_system(
      s, ends,
      [&](const PathSystem& system) {
        Polynomial product = 1;
        for (const LatticePath& p : system.paths) {
          product = ring::mul(product, p.weight, s.degree_cap);
        }
        if (system.sign > 0) {
          result.signed_sum += product;
        } else {
          result.signed_sum -= product;
        }
        ++result.systems;
        for (std::size_t t = 0; t < system.sigma.size(); ++t) {
          if (system.sigma[t] != t) {
            ++result.non_identity_systems;
            break;
          }
        }
      },
      max_pair_paths);
  return result;
}

std::vector<PathSystem> nonintersecting_systems(const LatticeScheme& s, const Endpoints& ends,
                                                std::uint64_t max_pair_paths) {
  std::vector<PathSystem> out;
  for_each_system(
      s, ends, [&](const PathSystem& system) { out.push_back(system); }, max_pair_paths);
  return out;
}

PolyMatrix weight_matrix(const LatticeScheme& s, const std::vector<LatticePoint>& from,
                         const std::vector<LatticePoint>& to) {
  PolyMatrix m(from.size(), to.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) m(i, j) = e_weight(s, from[i], to[j]);
  }
  return m;
}

Polynomial lgv_det(const LatticeScheme& s, const Endpoints& ends) {
  if (ends.sources.size() != ends.sinks.size()) {
    throw InvalidArgument("lgv_det: source and sink counts differ");
  }
  return symfun::det(weight_matrix(s, ends.sources, ends.sinks), s.degree_cap);
}

// ---------------------------------------------------------------------------
// Presets

Endpoints schur_endpoints(const Partition& lambda, int n) {
  Endpoints ends;
  for (int i = 1; i <= n; ++i) {
    ends.sources.push_back({i, 1});
    ends.sinks.push_back({i + lambda.part(n + 1 - i), n});
  }
  return ends;
}

LatticeScheme schur_scheme(const Partition& lambda, int n) {
  return LatticeScheme::jacobi_trudi(n, n + lambda.part(1));
}

Polynomial schur_via_lgv(const Partition& lambda, int n) {
  if (n < 1) throw InvalidArgument("schur_via_lgv: n must be positive");
  if (lambda.rows() > n) return 0;
  const LatticeScheme s = schur_scheme(lambda, n);
  Polynomial sum;
  for_each_system(s, schur_endpoints(lambda, n), [&](const PathSystem& system) {
    for (std::size_t t = 0; t < system.sigma.size(); ++t) {
      if (system.sigma[t] != t) {
        throw std::logic_error("schur_via_lgv: a non-intersecting system permutes the sinks");
      }
    }
    Polynomial product = 1;
    for (const LatticePath& p : system.paths) product *= p.weight;
    sum += product;
  });
  return sum;
}

Endpoints vandermonde_endpoints(int n) {
  Endpoints ends;
  for (int i = 1; i <= n; ++i) ends.sources.push_back({1, i});
  for (int j = 1; j <= n; ++j) ends.sinks.push_back({n + 1 - j, n});
  return ends;
}

LatticeScheme vandermonde_scheme(int n) { return LatticeScheme::schur_weighted(n, n, n + 1); }

BialternantEndpoints bialternant_endpoints(const Partition& lambda, int n) {
  BialternantEndpoints ends;
  for (int i = 1; i <= n; ++i) {
    ends.column_sources.push_back({1, n - i + 1});
    ends.diagonal_sources.push_back({i, n - i + 1});
  }
  ends.sinks = schur_endpoints(lambda, n).sinks;
  return ends;
}

LatticeScheme bialternant_scheme(const Partition& lambda, int n) {
  return LatticeScheme::schur_weighted(n, n + lambda.part(1), n + 1);
}

Endpoints cauchy_endpoints(int n) {
  Endpoints ends;
  for (int i = 1; i <= n; ++i) ends.sources.push_back({1, i});
  for (int j = 1; j <= n; ++j) ends.sinks.push_back({1, 2 * n + 1 - j});
  return ends;
}

Polynomial cauchy_entry(int n, int i, int j, unsigned degree_cap) {
  const LatticeScheme s = LatticeScheme::cauchy_doubled(n, degree_cap);
  return e_weight(s, {1, i}, {1, 2 * n + 1 - j});
}

// ---------------------------------------------------------------------------
// SVG

namespace {

constexpr int kSpacing = 40;
constexpr int kMargin = 36;
constexpr int kPanelsPerRow = 4;
constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string render_svg(const LatticeScheme& s, const Endpoints& ends,
                       const std::vector<PathSystem>& systems) {
  const int panel_w = (s.col_bound - 1) * kSpacing + 2 * kMargin;
  const int panel_h = (s.row_bound() - 1) * kSpacing + 2 * kMargin + 20;
  const int panels = std::max<int>(1, static_cast<int>(systems.size()));
  const int across = std::min(panels, kPanelsPerRow);
  const int down = (panels + kPanelsPerRow - 1) / kPanelsPerRow;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << across * panel_w
      << "\" height=\"" << down * panel_h << "\" font-family=\"sans-serif\" font-size=\"12\">\n";

  auto px = [&](LatticePoint p) { return kMargin + (p.col - 1) * kSpacing; };
  auto py = [&](LatticePoint p) { return 20 + kMargin + (s.row_bound() - p.row) * kSpacing; };

  for (int k = 0; k < panels; ++k) {
    out << "  <g transform=\"translate(" << (k % kPanelsPerRow) * panel_w << ","
        << (k / kPanelsPerRow) * panel_h << ")\">\n";
    if (static_cast<std::size_t>(k) < systems.size()) {
      out << "    <text x=\"" << kMargin / 2 << "\" y=\"16\">system " << k + 1 << ", sign "
          << (systems[static_cast<std::size_t>(k)].sign > 0 ? "+1" : "-1") << "</text>\n";
    }
    for (int row = 1; row <= s.row_bound(); ++row) {
      for (int col = 1; col <= s.col_bound; ++col) {
        out << "    <circle cx=\"" << px({col, row}) << "\" cy=\"" << py({col, row})
            << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
      }
    }
    if (static_cast<std::size_t>(k) < systems.size()) {
      const PathSystem& system = systems[static_cast<std::size_t>(k)];
      for (std::size_t t = 0; t < system.paths.size(); ++t) {
        out << "    <polyline fill=\"none\" stroke-width=\"3\" stroke=\""
            << kPalette[t % std::size(kPalette)] << "\" points=\"";
        const auto& vs = system.paths[t].vertices;
        for (std::size_t v = 0; v < vs.size(); ++v) {
          if (v) out << ' ';
          out << px(vs[v]) << ',' << py(vs[v]);
        }
        out << "\"/>\n";
      }
    }
    for (std::size_t i = 0; i < ends.sources.size(); ++i) {
      LatticePoint p = ends.sources[i];
      out << "    <circle cx=\"" << px(p) << "\" cy=\"" << py(p)
          << "\" r=\"5\" fill=\"#000000\"/>\n"
          << "    <text x=\"" << px(p) - 18 << "\" y=\"" << py(p) + 16 << "\">a" << i + 1
          << "</text>\n";
    }
    for (std::size_t j = 0; j < ends.sinks.size(); ++j) {
      LatticePoint p = ends.sinks[j];
      out << "    <rect x=\"" << px(p) - 5 << "\" y=\"" << py(p) - 5
          << "\" width=\"10\" height=\"10\" fill=\"#ffffff\" stroke=\"#000000\"/>\n"
          << "    <text x=\"" << px(p) + 6 << "\" y=\"" << py(p) - 8 << "\">b" << j + 1
          << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lgvsym::lgv
