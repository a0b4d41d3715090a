#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bubble/complex.hpp"
#include "bubble/paths.hpp"
#include "oracle.hpp"

using namespace bubble;

namespace {

Face edges(std::initializer_list<std::pair<int, int>> es) {
  Face f;
  for (auto [s, t] : es) f.push_back(CVertex::edge(s, t));
  return make_face(f);
}

Face unite(const Face& a, const Face& b) {
  Face f = a;
  f.insert(f.end(), b.begin(), b.end());
  return make_face(f);
}

}  // namespace

TEST_CASE("enumeration counts") {
  for (int q = 0; q <= 3; ++q)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        auto paths = enumerate_delannoy(m, n, q);
        CHECK(static_cast<std::int64_t>(paths.size()) == oracle::delannoy_count(m, n, q));
        CHECK(BigInt(static_cast<unsigned long>(paths.size())) == count_closed(m, n, q));
        std::set<std::string> seen;
        for (const auto& p : paths) seen.insert(to_string(p));
        CHECK(seen.size() == paths.size());
      }
  CHECK(enumerate_delannoy(2, 2, 2).size() == 22);
  CHECK_THROWS_AS(enumerate_delannoy(8, 7, 1), CapExceeded);
  CHECK_THROWS_AS(enumerate_delannoy(1, 1, 7), CapExceeded);
}

TEST_CASE("step order and printing") {
  auto paths = enumerate_delannoy(1, 1, 2);
  std::vector<std::string> text;
  for (const auto& p : paths) text.push_back(to_string(p));
  CHECK(text == std::vector<std::string>{"E N", "N E", "D1", "D2"});
  CHECK(to_string(enumerate_delannoy(0, 0, 1).at(0)) == "-");
  CHECK(to_string(parse_path("N E D2", 2, 2, 2)) == "N E D2");
  CHECK_THROWS_AS(parse_path("E", 2, 0, 0), InvalidArgument);
  CHECK_THROWS_AS(parse_path("D3", 1, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(parse_path("E X", 1, 1, 2), InvalidArgument);
}

TEST_CASE("faces and paths round trip") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto plus = build_complex(ComplexKind::GammaPlus, {m, n});
      auto faces = plus.faces();
      auto paths = enumerate_delannoy(m, n, 0);
      CHECK(paths.size() == faces.size());
      std::set<Face> images;
      for (const auto& p : paths) {
        Face f = face_from_path(p);
        CHECK(plus.contains(f));
        CHECK(path_from_face(f, m, n) == p);
        images.insert(f);
      }
      CHECK(images.size() == faces.size());
    }
  CHECK_THROWS_AS(path_from_face(edges({{1, 2}, {2, 1}}), 2, 2), InvalidArgument);
  CHECK_THROWS_AS(path_from_face({CVertex::loop_x(1)}, 2, 2), InvalidArgument);
  CHECK_THROWS_AS(face_from_path(parse_path("D1", 1, 1, 1)), InvalidArgument);
}

TEST_CASE("flags and paths round trip") {
  for (int q = 0; q <= 3; ++q)
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        std::set<Flag> flags;
        for (const auto& p : enumerate_delannoy(m, n, q)) {
          Flag fl = flag_from_path(p);
          REQUIRE(fl.size() == static_cast<std::size_t>(q + 1));
          for (std::size_t k = 1; k < fl.size(); ++k)
            CHECK(std::includes(fl[k].begin(), fl[k].end(), fl[k - 1].begin(), fl[k - 1].end()));
          CHECK(path_from_flag(fl, m, n) == p);
          flags.insert(fl);
        }
        CHECK(static_cast<std::int64_t>(flags.size()) == oracle::delannoy_count(m, n, q));
      }
  CHECK_THROWS_AS(path_from_flag({edges({{1, 1}}), edges({})}, 2, 2), InvalidArgument);
}

TEST_CASE("the worked 14 by 13 example") {
  auto p = parse_path("N E N D4 N N E D2 E N E D1 E D2 D2 E E D1 N N E", 14, 13, 4);
  Flag fl = flag_from_path(p);
  REQUIRE(fl.size() == 5);
  Face g0 = edges({{1, 1}, {3, 5}, {6, 7}, {14, 13}});
  Face g1 = unite(g0, edges({{7, 8}, {13, 11}}));
  Face g2 = unite(g1, edges({{4, 6}, {9, 9}, {10, 10}}));
  Face g4 = unite(g2, edges({{2, 3}}));
  CHECK(fl[0] == g0);
  CHECK(fl[1] == g1);
  CHECK(fl[2] == g2);
  CHECK(fl[3] == g2);
  CHECK(fl[4] == g4);
  CHECK(path_from_flag(fl, 14, 13) == p);
}

TEST_CASE("Schröder paths") {
  for (int n = 0; n <= 5; ++n) {
    auto zero = enumerate_delannoy(n, n, 0);
    CHECK(static_cast<std::int64_t>(schroder_filter(zero, SchroderKind::Schroder).size()) == oracle::catalan(n));
  }
  auto one = enumerate_delannoy(1, 1, 1);
  CHECK(schroder_filter(one, SchroderKind::Schroder).size() == 2);
  CHECK(schroder_filter(one, SchroderKind::Little).size() == 1);
  // Large Schröder numbers 1, 2, 6, 22, 90 and little ones 1, 1, 3, 11, 45.
  const std::size_t large[] = {1, 2, 6, 22, 90}, little[] = {1, 1, 3, 11, 45};
  for (int n = 0; n <= 4; ++n) {
    auto paths = enumerate_delannoy(n, n, 1);
    CHECK(schroder_filter(paths, SchroderKind::Schroder).size() == large[n]);
    CHECK(schroder_filter(paths, SchroderKind::Little).size() == little[n]);
  }
  CHECK_THROWS_AS(is_schroder(enumerate_delannoy(2, 1, 0).at(0), SchroderKind::Schroder), InvalidArgument);
}

TEST_CASE("Narayana numbers count left-leaning faces") {
  CHECK(narayana(4, 1) == 6);
  CHECK(narayana(4, 0) == 1);
  CHECK(narayana(4, 4) == 0);
  for (int n = 1; n <= 5; ++n) {
    auto f = f_vector(build_complex(ComplexKind::LeftLeaning, {n, n}));
    for (int k = 0; k < n; ++k) CHECK((k < static_cast<int>(f.size()) ? f[k] : BigInt(0)) == narayana(n, k));
  }
}
