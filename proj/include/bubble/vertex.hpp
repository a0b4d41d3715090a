#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bubble {

enum class LetterKind : std::uint8_t { X, Y };

/// A letter x_i or y_i. Index 0 is reserved for the sentinels x_0 / y_0.
struct Letter {
  LetterKind kind = LetterKind::X;
  int index = 0;

  static constexpr Letter x(int i) { return {LetterKind::X, i}; }
  static constexpr Letter y(int i) { return {LetterKind::Y, i}; }

  constexpr bool is_x() const { return kind == LetterKind::X; }
  constexpr bool is_y() const { return kind == LetterKind::Y; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(Letter l);
/// Parses "x3" / "y0".
Letter parse_letter(std::string_view token);

struct Params {
  int m = 0;
  int n = 0;

  constexpr int r() const { return m + n; }
  friend constexpr bool operator==(const Params&, const Params&) = default;
};

/// Vertex of the matching complex Gamma or the bipartite complex Delta.
///
/// Canonical order: loops x1..xm, loops y1..yn, then edges by (x, y).
struct CVertex {
  enum class Kind : std::uint8_t { LoopX = 0, LoopY = 1, Edge = 2 };

  Kind kind = Kind::LoopX;
  int a = 0;  // loop index, or x index of an edge
  int b = 0;  // y index of an edge, unused for loops

  static constexpr CVertex loop_x(int s) { return {Kind::LoopX, s, 0}; }
  static constexpr CVertex loop_y(int t) { return {Kind::LoopY, t, 0}; }
  static constexpr CVertex loop(Letter l) { return l.is_x() ? loop_x(l.index) : loop_y(l.index); }
  static constexpr CVertex edge(int s, int t) { return {Kind::Edge, s, t}; }

  constexpr bool is_loop() const { return kind != Kind::Edge; }
  constexpr bool is_edge() const { return kind == Kind::Edge; }
  constexpr Letter loop_letter() const {
    return kind == Kind::LoopX ? Letter::x(a) : Letter::y(a);
  }

  friend constexpr auto operator<=>(const CVertex&, const CVertex&) = default;
};

/// "x3", "y2" for loops, "x2-y0" for edges.
std::string to_string(const CVertex& v);
CVertex parse_vertex(std::string_view token);

/// A face as a canonically sorted, duplicate-free vertex list.
using Face = std::vector<CVertex>;

Face make_face(std::vector<CVertex> vertices);
std::string to_string(const Face& f);

/// NM1 and NM2: every letter used at most once, edges mutually noncrossing,
/// no sentinel indices.
bool is_gamma_face(const Face& f, Params p);

/// NB1 and NB2: no letter both looped and on an edge, no two edges cross.
/// Sentinels x0 / y0 may appear on edges, but not the edge x0-y0.
bool is_delta_face(const Face& f, Params p);

}  // namespace bubble
