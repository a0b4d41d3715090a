#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bubble/poly.hpp"

using namespace bubble;

namespace {

MultiPoly q() { return MultiPoly::variable("q"); }
MultiPoly t() { return MultiPoly::variable("t"); }
MultiPoly c(long v) { return MultiPoly::constant(BigInt(v)); }

}  // namespace

TEST_CASE("arithmetic and printing") {
  auto p = pow(q() + t(), 2);
  CHECK(to_string(p) == "q^2 + 2*q*t + t^2");
  CHECK(to_string(p - p) == "0");
  CHECK(to_string(c(3) * q() - c(1)) == "3*q - 1");
  CHECK(to_string(-q()) == "-q");
  CHECK(to_string(pow(q(), 0)) == "1");
  CHECK((q() + t()) * (q() - t()) == q() * q() - t() * t());
}

TEST_CASE("equality ignores variable order and unused variables") {
  auto a = parse_poly("q*t + 1", {"q", "t"});
  auto b = parse_poly("1 + t*q", {"t", "q", "z"});
  CHECK(a == b);
  CHECK(a.aligned({"t", "q"}).vars() == std::vector<std::string>{"t", "q"});
  CHECK_THROWS_AS(a.aligned({"q"}), InvalidArgument);
}

TEST_CASE("parse round trip") {
  for (const char* text : {"0", "1", "-7", "q^3*t - 2*q + 5", "3*q^2*t_x1*t_y2 + t_x1 - 1"}) {
    CHECK(to_string(parse_poly(text)) == text);
  }
  CHECK(parse_poly("q + q") == c(2) * q());
  CHECK_THROWS_AS(parse_poly("q^"), InvalidArgument);
  CHECK_THROWS_AS(parse_poly("q + + t"), InvalidArgument);
}

TEST_CASE("coefficients and degrees") {
  auto p = parse_poly("4*q^2*t + q - 3");
  CHECK(p.coeff(std::map<std::string, int>{{"q", 2}, {"t", 1}}) == 4);
  CHECK(p.coeff(std::map<std::string, int>{}) == -3);
  CHECK(p.coeff(std::map<std::string, int>{{"z", 1}}) == 0);
  CHECK(p.degree_in("q") == 2);
  CHECK(p.degree_in("z") == 0);
  CHECK(p.total_degree() == 3);
}

TEST_CASE("evaluation and substitution") {
  auto p = parse_poly("q^2*t - q + 1");
  CHECK(p.eval({{"q", Rat(2)}, {"t", Rat(3)}}) == Rat(11));
  CHECK(p.eval({{"q", Rat(1, 2)}, {"t", Rat(4)}}) == Rat(3, 2));
  CHECK_THROWS_AS(p.eval({{"q", Rat(1)}}), InvalidArgument);
  auto s = p.substitute("t", q() + c(1));
  CHECK(s == parse_poly("q^3 + q^2 - q + 1"));
  CHECK(p.substitute("z", q()) == p);
}

TEST_CASE("JSON round trip") {
  auto p = parse_poly("123456789012345678901234567890*q^2*t - q + 1");
  CHECK(poly_from_json(to_json(p)) == p);
  CHECK(poly_from_json(to_json(MultiPoly({"q"}))).is_zero());
  CHECK_THROWS_AS(poly_from_json("{\"vars\": 3}"), InvalidArgument);
}

TEST_CASE("merge_vars keeps first-list order") {
  CHECK(merge_vars({"q", "t"}, {"t", "z", "q"}) == std::vector<std::string>{"q", "t", "z"});
}
