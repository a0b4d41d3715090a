#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bubble/vertex_decomposition.hpp"

using namespace bubble;

namespace {

Complex strip_x1_edges(const Complex& gamma, int upto) {
  Complex c = gamma;
  for (int t = 1; t <= upto; ++t) c = deletion(c, {CVertex::edge(1, t)});
  return c;
}

}  // namespace

TEST_CASE("Gamma is vertex decomposable along the x1 edges") {
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      auto gamma = build_complex(ComplexKind::Gamma, {m, n});
      auto res = vertex_decomposition(gamma);
      REQUIRE(res.found);
      CHECK_FALSE(res.budget_exhausted);
      CHECK(validate_vd(gamma, res) == "");
      if (m >= 1) {
        auto chain = deletion_chain(res);
        REQUIRE(chain.size() >= static_cast<std::size_t>(n));
        for (int t = 1; t <= n; ++t) CHECK(chain[t - 1] == CVertex::edge(1, t));
      }
    }
  }
}

TEST_CASE("simplices and the empty complex are leaves") {
  Complex point(ComplexKind::Derived, {1, 0}, {{CVertex::loop_x(1)}});
  auto res = vertex_decomposition(point);
  REQUIRE(res.found);
  CHECK(res.nodes.size() == 1);
  CHECK(res.nodes[0].leaf);
  CHECK(vertex_decomposition(Complex()).found);
}

TEST_CASE("two disjoint edges are not vertex decomposable") {
  Complex two(ComplexKind::Derived, {2, 2},
              {{CVertex::loop_x(1), CVertex::loop_y(1)}, {CVertex::loop_x(2), CVertex::loop_y(2)}});
  auto res = vertex_decomposition(two);
  CHECK_FALSE(res.found);
  CHECK_FALSE(res.budget_exhausted);
}

TEST_CASE("a tampered witness is rejected") {
  auto gamma = build_complex(ComplexKind::Gamma, {2, 2});
  auto res = vertex_decomposition(gamma);
  REQUIRE(res.found);
  REQUIRE_FALSE(res.nodes[0].leaf);
  auto bad = res;
  bad.nodes[0].vertex = CVertex::loop_x(1);
  CHECK(validate_vd(gamma, bad) != "");
  auto swapped = res;
  std::swap(swapped.nodes[0].link, swapped.nodes[0].deletion);
  CHECK(validate_vd(gamma, swapped) != "");
}

TEST_CASE("search budget") {
  auto gamma = build_complex(ComplexKind::Gamma, {3, 3});
  auto res = vertex_decomposition(gamma, {.node_budget = 1});
  CHECK_FALSE(res.found);
  CHECK(res.budget_exhausted);
}

TEST_CASE("links of edges split Gamma") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      Params p{m, n};
      auto gamma = build_complex(ComplexKind::Gamma, p);
      for (int s = 1; s <= m; ++s) {
        for (int t = 1; t <= n; ++t) {
          auto left = build_complex(ComplexKind::Gamma, {s - 1, t - 1});
          auto right = shift(build_complex(ComplexKind::Gamma, {m - s, n - t}), s, t, p);
          CHECK(same_complex(link(gamma, {CVertex::edge(s, t)}), join(left, right)));
        }
      }
    }
  }
}

TEST_CASE("deleting every x1 edge leaves a cone over a smaller Gamma") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      Params p{m, n};
      auto gamma = build_complex(ComplexKind::Gamma, p);
      auto rest = strip_x1_edges(gamma, n);
      Complex apex(ComplexKind::Derived, p, {{CVertex::loop_x(1)}});
      auto cone = join(apex, shift(build_complex(ComplexKind::Gamma, {m - 1, n}), 1, 0, p));
      CHECK(same_complex(rest, cone));
      // Links inside the partial deletions agree with links in Gamma.
      for (int t = 1; t <= n; ++t) {
        auto partial = strip_x1_edges(gamma, t - 1);
        CHECK(same_complex(link(partial, {CVertex::edge(1, t)}), link(gamma, {CVertex::edge(1, t)})));
      }
    }
  }
}

TEST_CASE("vertex cap") {
  auto big = build_complex(ComplexKind::Gamma, {4, 4});
  CHECK(big.vertex_count() > kVdVertexCap);
  CHECK_THROWS_AS(vertex_decomposition(big), CapExceeded);
}
