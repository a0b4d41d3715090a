#include "bubble/vertex.hpp"

#include <algorithm>
#include <charconv>

#include "bubble/error.hpp"

namespace bubble {

std::string to_string(Letter l) { return (l.is_x() ? "x" : "y") + std::to_string(l.index); }

Letter parse_letter(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) {
    throw InvalidArgument("bad letter token '" + std::string(token) + "'");
  }
  int idx = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), idx);
  if (ec != std::errc() || ptr != token.data() + token.size() || idx < 0) {
    throw InvalidArgument("bad letter token '" + std::string(token) + "'");
  }
  return token[0] == 'x' ? Letter::x(idx) : Letter::y(idx);
}

std::string to_string(const CVertex& v) {
  switch (v.kind) {
    case CVertex::Kind::LoopX:
      return "x" + std::to_string(v.a);
    case CVertex::Kind::LoopY:
      return "y" + std::to_string(v.a);
    case CVertex::Kind::Edge:
      break;
  }
  return "x" + std::to_string(v.a) + "-y" + std::to_string(v.b);
}

CVertex parse_vertex(std::string_view token) {
  auto dash = token.find('-');
  if (dash == std::string_view::npos) {
    Letter l = parse_letter(token);
    return CVertex::loop(l);
  }
  Letter x = parse_letter(token.substr(0, dash));
  Letter y = parse_letter(token.substr(dash + 1));
  if (!x.is_x() || !y.is_y()) throw InvalidArgument("bad edge token '" + std::string(token) + "'");
  return CVertex::edge(x.index, y.index);
}

Face make_face(std::vector<CVertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

std::string to_string(const Face& f) {
  std::string out = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ", ";
    out += to_string(f[i]);
  }
  return out + "}";
}

namespace {

bool edges_cross(const CVertex& e1, const CVertex& e2) {
  return (e1.a < e2.a && e1.b > e2.b) || (e1.a > e2.a && e1.b < e2.b);
}

bool in_range(const CVertex& v, Params p, int min_index) {
  if (v.kind == CVertex::Kind::LoopX) return v.a >= 1 && v.a <= p.m;
  if (v.kind == CVertex::Kind::LoopY) return v.a >= 1 && v.a <= p.n;
  if (v.a == 0 && v.b == 0) return false;
  return v.a >= min_index && v.a <= p.m && v.b >= min_index && v.b <= p.n;
}

}  // namespace

bool is_gamma_face(const Face& f, Params p) {
  std::vector<int> x_used(p.m + 1, 0), y_used(p.n + 1, 0);
  for (const auto& v : f) {
    if (!in_range(v, p, 1)) return false;
    if (v.kind == CVertex::Kind::LoopX) {
      ++x_used[v.a];
    } else if (v.kind == CVertex::Kind::LoopY) {
      ++y_used[v.a];
    } else {
      ++x_used[v.a];
      ++y_used[v.b];
    }
  }
  for (int c : x_used)
    if (c > 1) return false;
  for (int c : y_used)
    if (c > 1) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_edge()) continue;
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[j].is_edge() && (edges_cross(f[i], f[j]) || f[i].a == f[j].a || f[i].b == f[j].b)) {
        return false;
      }
    }
  }
  return true;
}

bool is_delta_face(const Face& f, Params p) {
  std::vector<bool> x_loop(p.m + 1, false), y_loop(p.n + 1, false);
  for (const auto& v : f) {
    if (!in_range(v, p, 0)) return false;
    if (v.kind == CVertex::Kind::LoopX) x_loop[v.a] = true;
    if (v.kind == CVertex::Kind::LoopY) y_loop[v.a] = true;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_edge()) continue;
    if (x_loop[f[i].a] || y_loop[f[i].b]) return false;
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f[j].is_edge() && edges_cross(f[i], f[j])) return false;
    }
  }
  return true;
}

}  // namespace bubble
