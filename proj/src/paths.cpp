#include "bubble/paths.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bubble {

namespace {

void check_shape(int m, int n, int q) {
  if (m < 0 || n < 0 || q < 0) throw InvalidArgument("path parameters must be nonnegative");
}

void extend(int m, int n, int q, int x, int y, std::vector<Step>& cur, std::vector<DelannoyPath>& out) {
  if (x == m && y == n) {
    out.push_back(DelannoyPath{m, n, q, cur});
    return;
  }
  if (x < m) {
    cur.push_back({Step::Kind::E, 0});
    extend(m, n, q, x + 1, y, cur, out);
    cur.pop_back();
  }
  if (y < n) {
    cur.push_back({Step::Kind::N, 0});
    extend(m, n, q, x, y + 1, cur, out);
    cur.pop_back();
  }
  if (x < m && y < n) {
    for (int c = 1; c <= q; ++c) {
      cur.push_back({Step::Kind::D, c});
      extend(m, n, q, x + 1, y + 1, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<DelannoyPath> enumerate_delannoy(int m, int n, int q, CapPolicy policy) {
  check_shape(m, n, q);
  require_within_cap("m+n", m + n, kPathSizeCap, policy);
  require_within_cap("q", q, kPathColorCap, policy);
  std::vector<DelannoyPath> out;
  std::vector<Step> cur;
  extend(m, n, q, 0, 0, cur, out);
  return out;
}

BigInt count_closed(int m, int n, int q) {
  check_shape(m, n, q);
  BigInt total = 0, base = q + 1;
  for (int a = 0; a <= std::min(m, n); ++a) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(a));
    total += binomial(m, a) * binomial(n, a) * pw;
  }
  return total;
}

std::string to_string(const DelannoyPath& p) {
  if (p.steps.empty()) return "-";
  std::string out;
  for (const Step& s : p.steps) {
    if (!out.empty()) out += ' ';
    switch (s.kind) {
      case Step::Kind::E: out += 'E'; break;
      case Step::Kind::N: out += 'N'; break;
      case Step::Kind::D: out += "D" + std::to_string(s.color); break;
    }
  }
  return out;
}

DelannoyPath parse_path(std::string_view text, int m, int n, int q) {
  check_shape(m, n, q);
  DelannoyPath p{m, n, q, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  int x = 0, y = 0;
  while (in >> tok) {
    if (tok == "-") continue;
    if (tok == "E") {
      p.steps.push_back({Step::Kind::E, 0});
      ++x;
    } else if (tok == "N") {
      p.steps.push_back({Step::Kind::N, 0});
      ++y;
    } else if (tok.size() > 1 && tok[0] == 'D' &&
               std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      int c = std::stoi(tok.substr(1));
      if (c < 1 || c > q) throw InvalidArgument("diagonal color out of range: " + tok);
      p.steps.push_back({Step::Kind::D, c});
      ++x;
      ++y;
    } else {
      throw InvalidArgument("bad path step: " + tok);
    }
  }
  if (x != m || y != n) {
    throw InvalidArgument("path ends at (" + std::to_string(x) + "," + std::to_string(y) + "), expected (" +
                          std::to_string(m) + "," + std::to_string(n) + ")");
  }
  return p;
}

std::vector<std::pair<int, int>> peaks(const DelannoyPath& p) {
  std::vector<std::pair<int, int>> out;
  int x = 0, y = 0;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    if (s.kind != Step::Kind::N) x += 1;
    if (s.kind != Step::Kind::E) y += 1;
    if (s.kind == Step::Kind::N && i + 1 < p.steps.size() && p.steps[i + 1].kind == Step::Kind::E) {
      out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Diagonal> diagonals(const DelannoyPath& p) {
  std::vector<Diagonal> out;
  int x = 0, y = 0;
  for (const Step& s : p.steps) {
    if (s.kind != Step::Kind::N) x += 1;
    if (s.kind != Step::Kind::E) y += 1;
    if (s.kind == Step::Kind::D) out.push_back({x, y, s.color});
  }
  return out;
}

Face face_from_path(const DelannoyPath& p) {
  if (p.q != 0 || !diagonals(p).empty()) throw InvalidArgument("face_from_path needs a 0-Delannoy path");
  Face f;
  for (auto [i, j] : peaks(p)) f.push_back(CVertex::edge(i + 1, j));
  return make_face(std::move(f));
}

DelannoyPath path_from_face(const Face& f, int m, int n) { return path_from_flag(Flag{f}, m, n); }

Flag flag_from_path(const DelannoyPath& p) {
  Flag flag(static_cast<std::size_t>(p.q + 1));
  for (auto [i, j] : peaks(p)) flag[0].push_back(CVertex::edge(i + 1, j));
  const auto diags = diagonals(p);
  for (int k = 1; k <= p.q; ++k) {
    flag[k] = flag[k - 1];
    for (const Diagonal& d : diags)
      if (d.color == k) flag[k].push_back(CVertex::edge(d.s, d.t));
  }
  for (Face& g : flag) g = make_face(std::move(g));
  return flag;
}

DelannoyPath path_from_flag(const Flag& flag, int m, int n) {
  if (flag.empty()) throw InvalidArgument("a flag has at least one face");
  const int q = static_cast<int>(flag.size()) - 1;
  check_shape(m, n, q);
  // (s, t, color): color 0 marks a peak at (s-1, t).
  std::vector<std::tuple<int, int, int>> marks;
  for (int k = 0; k <= q; ++k) {
    const Face& g = flag[k];
    for (const CVertex& v : g) {
      if (!v.is_edge()) throw InvalidArgument("flag face contains a loop: " + to_string(v));
    }
    if (!is_gamma_face(g, {m, n})) throw InvalidArgument("not a face of the matching complex: " + to_string(g));
    if (k > 0) {
      const Face& prev = flag[k - 1];
      if (!std::includes(g.begin(), g.end(), prev.begin(), prev.end())) {
        throw InvalidArgument("flag is not a chain at position " + std::to_string(k));
      }
      Face fresh;
      std::set_difference(g.begin(), g.end(), prev.begin(), prev.end(), std::back_inserter(fresh));
      for (const CVertex& v : fresh) marks.emplace_back(v.a, v.b, k);
    } else {
      for (const CVertex& v : g) marks.emplace_back(v.a, v.b, 0);
    }
  }
  std::sort(marks.begin(), marks.end());
  DelannoyPath p{m, n, q, {}};
  int x = 0, y = 0;
  auto walk = [&](int tx, int ty) {
    for (; x < tx; ++x) p.steps.push_back({Step::Kind::E, 0});
    for (; y < ty; ++y) p.steps.push_back({Step::Kind::N, 0});
  };
  for (auto [s, t, k] : marks) {
    if (s - 1 < x || t - 1 < y) throw InvalidArgument("crossing marks at x" + std::to_string(s) + "-y" + std::to_string(t));
    if (k == 0) {
      walk(s - 1, t);
      p.steps.push_back({Step::Kind::E, 0});
      x = s;
    } else {
      walk(s - 1, t - 1);
      p.steps.push_back({Step::Kind::D, k});
      x = s;
      y = t;
    }
  }
  walk(m, n);
  return p;
}

bool is_schroder(const DelannoyPath& p, SchroderKind kind) {
  if (p.m != p.n) throw InvalidArgument("Schröder paths need m = n");
  for (auto [i, j] : peaks(p))
    if (i < j) return false;
  for (const Diagonal& d : diagonals(p)) {
    if (d.s < d.t) return false;
    if (kind == SchroderKind::Little && d.s == d.t) return false;
  }
  return true;
}

std::vector<DelannoyPath> schroder_filter(const std::vector<DelannoyPath>& paths, SchroderKind kind) {
  std::vector<DelannoyPath> out;
  for (const auto& p : paths)
    if (is_schroder(p, kind)) out.push_back(p);
  return out;
}

BigInt narayana(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n, k) * binomial(n, k + 1) / n;
}

}  // namespace bubble
