#include "lgvsym/combinat.hpp"
#include "lgvsym/errors.hpp"
#include "lgvsym/lgv.hpp"
#include "support/random_poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lgvsym;
using namespace lgvsym::lgv;
using namespace lgvsym::testing;
using combinat::Partition;

namespace {

Partition L(std::vector<int> parts) { return Partition(std::move(parts)); }

struct Drained {
  std::size_t count = 0;
  Polynomial sum;
};

Drained drain(PathStream stream) {
  Drained d;
  while (auto path = stream.next()) {
    ++d.count;
    d.sum += path->weight;
  }
  return d;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("edge weights") {
  const auto jt = LatticeScheme::jacobi_trudi(3, 4);
  auto edges = out_edges(jt, {2, 3});
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].to == LatticePoint{3, 3});
  CHECK(edges[0].weight == X(3));
  edges = out_edges(jt, {4, 1});
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].to == LatticePoint{4, 2});
  CHECK(edges[0].weight == 1);

  const auto sw = LatticeScheme::schur_weighted(3, 4);
  CHECK(out_edges(sw, {2, 1})[0].weight == X(1) - X(3));
  const auto cut = LatticeScheme::schur_weighted(3, 4, 4);
  CHECK(out_edges(cut, {3, 2})[0].weight == X(2));
  CHECK(out_edges(cut, {1, 2})[0].weight == X(2) - X(3));

  const auto cd = LatticeScheme::cauchy_doubled(1, 4);
  CHECK(cd.row_bound() == 2);
  CHECK_FALSE(cd.rightward(2));
  // Row 2 of the doubled graph runs leftward: (2,2) -> (1,2) with weight y1.
  edges = out_edges(cd, {2, 2});
  REQUIRE_FALSE(edges.empty());
  CHECK(edges[0].to == LatticePoint{1, 2});
  CHECK(edges[0].weight == Y(1));

  auto bad = jt;
  bad.corrupted = true;
  CHECK(out_edges(bad, {1, 1})[0].weight == X(2));
}

TEST_CASE("path sums") {
  const auto sw = LatticeScheme::schur_weighted(2, 2);
  CHECK(e_weight(sw, {1, 1}, {2, 1}) == X(1) - X(2));
  CHECK(e_weight(sw, {1, 1}, {2, 2}) == X(1) - X(3));
  CHECK(e_weight(sw, {1, 1}, {1, 1}) == 1);
  CHECK(e_weight(sw, {2, 2}, {1, 1}).is_zero());
  CHECK_THROWS_AS(e_weight(sw, {1, 1}, {3, 1}), OutOfBounds);
  CHECK_THROWS_AS(e_weight(sw, {0, 1}, {1, 1}), OutOfBounds);

  const auto cd = LatticeScheme::cauchy_doubled(1, 4);
  CHECK(e_weight(cd, {1, 1}, {1, 2}) == P("x1^2*y1^2 + x1*y1 + 1"));
  CHECK(cauchy_entry(1, 1, 1, 4) == P("x1^2*y1^2 + x1*y1 + 1"));
}

TEST_CASE("closed forms of the path sums") {
  CHECK(lemma_product(1, 4) == 1);
  CHECK(lemma_product(2, 2) == X(1) - X(3));
  CHECK(lemma_product(3, 1) == (X(1) - X(3)) * (X(1) - X(2)));
  CHECK(corollary_product(1, 1, 2) == 1);
  CHECK(corollary_power(2, 4, 3) == ring::pow(X(2), 3));
  for (int n = 2; n <= 4; ++n) {
    const auto cut = LatticeScheme::schur_weighted(n, 5, n + 1);
    for (int t = 1; t < n; ++t) {
      for (int m = 1; m <= 5; ++m) CHECK(e_weight(cut, {1, t}, {m, n}) == corollary_power(t, m, n));
    }
  }
}

TEST_CASE("path streams agree with dynamic programming") {
  const auto sw = LatticeScheme::schur_weighted(2, 2);
  CHECK(drain(enumerate_paths(sw, {1, 1}, {2, 2})).count == 2);
  const auto single = drain(enumerate_paths(sw, {2, 2}, {2, 2}));
  CHECK(single.count == 1);
  CHECK(single.sum == 1);
  CHECK(drain(enumerate_paths(sw, {2, 2}, {1, 1})).count == 0);

  RandomPolynomials gen(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = gen.uniform(1, 4);
    const int cols = gen.uniform(1, 4);
    LatticeScheme s;
    switch (trial % 3) {
      case 0: s = LatticeScheme::jacobi_trudi(rows, cols); break;
      case 1: s = LatticeScheme::schur_weighted(rows, cols, rows + 1); break;
      default: s = LatticeScheme::cauchy_doubled(gen.uniform(1, 2), 4, cols); break;
    }
    const LatticePoint a{gen.uniform(1, s.col_bound), gen.uniform(1, s.row_bound())};
    const LatticePoint b{gen.uniform(1, s.col_bound), gen.uniform(1, s.row_bound())};
    CAPTURE(to_string(s.kind));
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    const auto d = drain(enumerate_paths(s, a, b));
    CHECK(d.count == path_count(s, a, b));
    if (s.degree_cap) {
      CHECK(ring::truncate_degree(d.sum, *s.degree_cap) == e_weight(s, a, b));
    } else {
      CHECK(d.sum == e_weight(s, a, b));
    }
  }
}

TEST_CASE("path counts are binomial on the rectangle") {
  const auto jt = LatticeScheme::jacobi_trudi(5, 5);
  CHECK(path_count(jt, {1, 1}, {5, 5}) == 70);
  CHECK(path_count(jt, {1, 1}, {1, 5}) == 1);
  CHECK(path_count(jt, {2, 1}, {1, 5}) == 0);
}

TEST_CASE("non-intersecting systems") {
  const auto sw = LatticeScheme::schur_weighted(2, 3);
  const Endpoints one{{{1, 1}}, {{2, 2}}};
  CHECK(nonintersecting_sum(sw, one).signed_sum == e_weight(sw, {1, 1}, {2, 2}));

  const auto v2 = nonintersecting_sum(vandermonde_scheme(2), vandermonde_endpoints(2));
  CHECK(v2.systems == 1);
  CHECK(v2.signed_sum == X(1) - X(2));
  CHECK(lgv_det(vandermonde_scheme(3), vandermonde_endpoints(3)) ==
        (X(1) - X(2)) * (X(1) - X(3)) * (X(2) - X(3)));

  CHECK_THROWS_AS(nonintersecting_sum(sw, {{{1, 1}}, {}}), InvalidArgument);

  const auto systems = nonintersecting_systems(vandermonde_scheme(3), vandermonde_endpoints(3));
  REQUIRE(systems.size() == 1);
  for (const auto& path : systems[0].paths) {
    std::set<LatticePoint> seen(path.vertices.begin(), path.vertices.end());
    CHECK(seen.size() == path.vertices.size());
  }
  std::set<LatticePoint> all;
  std::size_t total = 0;
  for (const auto& path : systems[0].paths) {
    all.insert(path.vertices.begin(), path.vertices.end());
    total += path.vertices.size();
  }
  CHECK(all.size() == total);
}

TEST_CASE("the signed sum equals the determinant on random configurations") {
  RandomPolynomials gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = gen.uniform(2, 4);
    const int cols = gen.uniform(2, 4);
    const auto s = trial % 2 ? LatticeScheme::jacobi_trudi(rows, cols)
                             : LatticeScheme::schur_weighted(rows, cols);
    const int k = gen.uniform(1, 3);
    std::set<LatticePoint> src;
    std::set<LatticePoint> snk;
    while (static_cast<int>(src.size()) < k) src.insert({gen.uniform(1, cols), gen.uniform(1, rows)});
    while (static_cast<int>(snk.size()) < k) snk.insert({gen.uniform(1, cols), gen.uniform(1, rows)});
    Endpoints ends{{src.begin(), src.end()}, {snk.begin(), snk.end()}};
    std::shuffle(ends.sinks.begin(), ends.sinks.end(), gen.engine());
    CHECK(nonintersecting_sum(s, ends).signed_sum == lgv_det(s, ends));
  }
}

TEST_CASE("refuses oversized enumerations") {
  const auto big = LatticeScheme::jacobi_trudi(20, 20);
  const Endpoints ends{{{1, 1}}, {{20, 20}}};
  CHECK_THROWS_AS(nonintersecting_sum(big, ends), TooLarge);
  CHECK(path_count(big, {1, 1}, {20, 20}) > kMaxPairPaths);
  const auto small = LatticeScheme::jacobi_trudi(6, 6);
  const Endpoints corner{{{1, 1}}, {{6, 6}}};
  CHECK(path_count(small, {1, 1}, {6, 6}) == 252);
  CHECK_THROWS_AS(nonintersecting_sum(small, corner, 251), TooLarge);
  CHECK(nonintersecting_sum(small, corner, 252).systems == 252);
}

TEST_CASE("preset endpoints") {
  CHECK(vandermonde_endpoints(1).sources == std::vector<LatticePoint>{{1, 1}});
  CHECK(vandermonde_endpoints(1).sinks == std::vector<LatticePoint>{{1, 1}});
  CHECK(vandermonde_endpoints(2).sources == std::vector<LatticePoint>{{1, 1}, {1, 2}});
  CHECK(vandermonde_endpoints(2).sinks == std::vector<LatticePoint>{{2, 2}, {1, 2}});
  CHECK(vandermonde_endpoints(3).sinks == std::vector<LatticePoint>{{3, 3}, {2, 3}, {1, 3}});

  const auto two = bialternant_endpoints(L({}), 2);
  CHECK(two.diagonal_sources == std::vector<LatticePoint>{{1, 2}, {2, 1}});
  CHECK(two.column_sources == std::vector<LatticePoint>{{1, 2}, {1, 1}});
  const auto one = bialternant_endpoints(L({1}), 1);
  CHECK(one.diagonal_sources == one.column_sources);
  CHECK(one.column_sources == std::vector<LatticePoint>{{1, 1}});

  CHECK(schur_endpoints(L({1}), 2).sinks == std::vector<LatticePoint>{{1, 2}, {3, 2}});
  CHECK(cauchy_endpoints(2).sinks == std::vector<LatticePoint>{{1, 4}, {1, 3}});
}

TEST_CASE("Schur polynomials from path systems") {
  CHECK(schur_via_lgv(L({}), 2) == 1);
  CHECK(schur_via_lgv(L({1}), 2) == X(1) + X(2));
  CHECK(schur_via_lgv(L({2, 1}), 3) == combinat::schur_tableaux(L({2, 1}), 3));
  CHECK(schur_via_lgv(L({1, 1, 1}), 2).is_zero());
  for (const auto& lambda : combinat::partitions_up_to(4, 3)) {
    CHECK(schur_via_lgv(lambda, 3) == combinat::schur_tableaux(lambda, 3));
  }
}

TEST_CASE("window widening does not change path sums") {
  // The preset windows already hold every contributing path.
  for (const auto& lambda : combinat::partitions_up_to(4, 3)) {
    const int n = 3;
    const auto s = bialternant_scheme(lambda, n);
    auto wide = s;
    wide.col_bound += 3;
    const auto ends = bialternant_endpoints(lambda, n);
    for (const auto& a : ends.column_sources) {
      for (const auto& b : ends.sinks) CHECK(e_weight(s, a, b) == e_weight(wide, a, b));
    }
  }
  auto cd = LatticeScheme::cauchy_doubled(2, 4);
  auto cd_wide = LatticeScheme::cauchy_doubled(2, 4, 9);
  const auto ends = cauchy_endpoints(2);
  CHECK(lgv_det(cd, ends) == lgv_det(cd_wide, ends));
}

TEST_CASE("SVG rendering") {
  const auto s = vandermonde_scheme(3);
  const auto ends = vandermonde_endpoints(3);
  const auto systems = nonintersecting_systems(s, ends);
  const std::string svg = render_svg(s, ends, systems);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(occurrences(svg, "<polyline") == 3);
  CHECK(occurrences(svg, "<rect") == 3);
  CHECK(svg.find(">a1<") != std::string::npos);
  CHECK(svg.find(">b3<") != std::string::npos);
  CHECK(svg.find("system 1, sign +1") != std::string::npos);
  CHECK(render_svg(s, ends, {}).find("<polyline") == std::string::npos);
}
