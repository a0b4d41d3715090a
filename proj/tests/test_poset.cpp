#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "bubble/poset.hpp"
#include "oracle.hpp"

using namespace bubble;

namespace {

// Subsets of {0,1,2} ordered by inclusion.
FinitePoset boolean3() {
  return FinitePoset::from_relation(8, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

// Two minimal and two maximal elements, each maximal above both minimal ones.
FinitePoset bowtie() { return FinitePoset::from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("construction from a relation checks the axioms") {
  auto b = boolean3();
  CHECK(b.size() == 8);
  CHECK(b.cover_count() == 12);
  CHECK(b.bottom() == std::optional<std::size_t>{0});
  CHECK(b.top() == std::optional<std::size_t>{7});
  CHECK_THROWS_WITH_AS(FinitePoset::from_relation(2, [](std::size_t, std::size_t) { return true; }),
                       doctest::Contains("antisymmetry"), InvalidArgument);
  CHECK_THROWS_WITH_AS(FinitePoset::from_relation(2, [](std::size_t a, std::size_t b) { return a < b; }),
                       doctest::Contains("reflexivity"), InvalidArgument);
  // 0 < 1 < 2 without 0 < 2.
  CHECK_THROWS_WITH_AS(FinitePoset::from_relation(3,
                                                  [](std::size_t a, std::size_t b) {
                                                    return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
                                                  }),
                       doctest::Contains("transitivity"), InvalidArgument);
}

TEST_CASE("construction from covers") {
  auto chain = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(chain.leq(0, 2));
  CHECK_FALSE(chain.leq(2, 0));
  CHECK(chain.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FinitePoset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), InvalidArgument);
}

TEST_CASE("Möbius function") {
  auto b = boolean3();
  auto mu = mobius(b);
  for (std::size_t s = 0; s < 8; ++s)
    for (std::size_t t = 0; t < 8; ++t) {
      long want = (s & ~t) ? 0 : ((std::popcount(t & ~s) % 2) ? -1 : 1);
      CHECK(mu(s, t) == want);
    }
  auto chain = FinitePoset::from_covers(4, {{0, 1}, {1, 2}, {2, 3}});
  auto row = mobius_row(chain, 0);
  CHECK(row == std::vector<std::int64_t>{1, -1, 0, 0});
}

TEST_CASE("Möbius rows sum to zero below the top") {
  auto shuf = shuffle_poset({2, 2});
  const std::size_t top = *shuf.poset.top();
  for (std::size_t u = 0; u < shuf.poset.size(); ++u) {
    auto row = mobius_row(shuf.poset, u);
    std::int64_t sum = 0;
    for (auto v : row) sum += v;
    CHECK(sum == (u == top ? 1 : 0));
  }
}

TEST_CASE("lattice check") {
  CHECK(check_lattice(boolean3()).ok);
  auto bt = check_lattice(bowtie());
  CHECK_FALSE(bt.ok);
  CHECK(bt.failure == "no join");
  auto vee = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
  auto v = check_lattice(vee);
  CHECK_FALSE(v.ok);
  CHECK(v.failure == "no join");
  auto wedge = FinitePoset::from_covers(3, {{1, 0}, {2, 0}});
  CHECK(check_lattice(wedge).failure == "no meet");
}

TEST_CASE("linear extensions") {
  auto b = boolean3();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto ext = linear_extension(b, seed);
    CHECK(is_linear_extension(b, ext));
    CHECK(ext == linear_extension(b, seed));
  }
  CHECK_FALSE(is_linear_extension(b, {7, 0, 1, 2, 3, 4, 5, 6}));
  CHECK_FALSE(is_linear_extension(b, {0, 1, 2}));
}

TEST_CASE("intervals") {
  auto b = boolean3();
  CHECK(interval(b, 1, 7) == std::vector<std::size_t>{1, 3, 5, 7});
  CHECK_THROWS_AS(interval(b, 1, 2), InvalidArgument);
}

TEST_CASE("word posets match the brute-force order") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    for (bool bubble : {true, false}) {
      auto wp = bubble ? bubble_poset({m, n}) : shuffle_poset({m, n});
      auto ref = oracle::make_poset(m, n, bubble);
      REQUIRE(wp.words.size() == ref.size());
      for (std::size_t a = 0; a < wp.words.size(); ++a) {
        oracle::Word wa(wp.words[a].letters().begin(), wp.words[a].letters().end());
        const std::size_t ia = ref.index(wa);
        for (std::size_t b = 0; b < wp.words.size(); ++b) {
          oracle::Word wb(wp.words[b].letters().begin(), wp.words[b].letters().end());
          CHECK(wp.poset.leq(a, b) == static_cast<bool>(ref.leq[ia][ref.index(wb)]));
        }
      }
      auto direct = word_poset_from_order(bubble ? Order::Bubble : Order::Shuffle, {m, n});
      CHECK(direct.poset.covers() == wp.poset.covers());
    }
  }
}

TEST_CASE("bubble and shuffle lattices are lattices") {
  for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {2, 1}, {2, 2}, {3, 2}}) {
    CHECK(check_lattice(bubble_poset({m, n}).poset).ok);
    CHECK(check_lattice(shuffle_poset({m, n}).poset).ok);
  }
}

TEST_CASE("Möbius of the shuffle lattice by brute force") {
  auto shuf = shuffle_poset({2, 1});
  auto ref = oracle::make_poset(2, 1, false);
  auto ref_mu = oracle::mobius(ref);
  auto mu = mobius(shuf.poset);
  for (std::size_t a = 0; a < shuf.words.size(); ++a) {
    const auto ia = ref.index({shuf.words[a].letters().begin(), shuf.words[a].letters().end()});
    for (std::size_t b = 0; b < shuf.words.size(); ++b) {
      const auto ib = ref.index({shuf.words[b].letters().begin(), shuf.words[b].letters().end()});
      CHECK(mu(a, b) == ref_mu[{ia, ib}]);
    }
  }
}

TEST_CASE("letter swap is an anti-isomorphism") {
  auto bub = bubble_poset({2, 1}), dual = bubble_poset({1, 2});
  std::vector<std::size_t> map;
  for (const auto& w : bub.words) map.push_back(dual.index_of(dualize(w)));
  CHECK(check_anti_isomorphism(bub.poset, dual.poset, map).ok);
  std::vector<std::size_t> identity(map.size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  CHECK_FALSE(check_anti_isomorphism(bub.poset, dual.poset, identity).ok);
}

TEST_CASE("DOT and JSON export") {
  auto bub = bubble_poset({1, 0});
  CHECK(to_dot(bub, true) == "digraph {\n  rankdir=BT;\n  \"-\";\n  \"x1\";\n  \"x1\" -> \"-\" [label=\"x1\"];\n}\n");
  CHECK(to_json(bub, false).find("\"order\": \"bub\"") != std::string::npos);
  CHECK_THROWS_AS(to_dot(shuffle_poset({1, 1}), true), InvalidArgument);
  CHECK(to_dot(bub, true) == to_dot(bubble_poset({1, 0}), true));
}
