// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Where a criterion names a brute-force reference, the reference comes from
// oracle.hpp and not from the library.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bubble/complex.hpp"
#include "bubble/identities.hpp"
#include "bubble/paths.hpp"
#include "bubble/poset.hpp"
#include "bubble/triangles.hpp"
#include "bubble/vertex_decomposition.hpp"
#include "bubble/word.hpp"
#include "oracle.hpp"

using namespace bubble;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;  // first failure
  int failures = 0;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
    ++failures;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string cell(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

const std::vector<std::string> kQT{"q", "t"};

MultiPoly qt(const char* text) { return parse_poly(text, kQT); }

oracle::Word plain(const ShuffleWord& w) { return {w.letters().begin(), w.letters().end()}; }

// ---- criteria ----------------------------------------------------------------

Outcome worked_examples() {
  Outcome o;
  Params p{2, 1};
  o.require(h_triangle(p, TriangleMode::Definitional) == qt("q^3*t^3 + 3*q^2*t^2 + 2*q^2*t + 3*q*t + 2*q + 1"),
            "H_{2,1} differs");
  o.require(f_triangle(p, TriangleMode::Definitional) ==
                qt("3*q^3 + 5*q^2*t + 3*q*t^2 + t^3 + 7*q^2 + 8*q*t + 3*t^2 + 5*q + 3*t + 1"),
            "F_{2,1} differs");
  o.require(m_triangle(p, TriangleMode::Definitional) ==
                qt("q^3*t^3 - 5*q^2*t^3 + 5*q^2*t^2 + 7*q*t^3 - 12*q*t^2 - 3*t^3 + 5*q*t + 7*t^2 - 5*t + 1"),
            "M_{2,1} differs");
  return o;
}

Outcome identity_range(const std::vector<std::string>& names, const std::function<bool(int, int)>& in_range,
                       int max_each) {
  Outcome o;
  for (int m = 0; m <= max_each; ++m)
    for (int n = 0; n <= max_each; ++n) {
      if (!in_range(m, n)) continue;
      Workbench wb({m, n});
      for (const auto& name : names) {
        auto r = verify_identity(name, wb);
        o.require(r.pass, format_report(r));
      }
    }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      Workbench wb({m, n});
      o.require(wb.h() == h_triangle_closed({m, n}), "H closed " + cell(m, n));
      o.require(wb.f() == f_triangle_closed({m, n}), "F closed " + cell(m, n));
      o.require(wb.ch() == char_poly_closed({m, n}), "char closed " + cell(m, n));
      auto r = verify_identity("char_from_h", wb);
      o.require(r.pass, format_report(r));
    }
  return o;
}

// Transitive reduction of the brute-force order with bit rows.
Outcome cover_structure() {
  Outcome o;
  for (int m = 0; m <= 7; ++m)
    for (int n = 0; m + n <= 7; ++n) {
      auto words = enumerate_words({m, n});
      std::int64_t sum = 0;
      for (int a = 0; a <= std::min(m, n); ++a)
        sum += oracle::binom(m, a) * oracle::binom(n, a) * (std::int64_t{1} << (m + n - 2 * a));
      o.require(static_cast<std::int64_t>(words.size()) == sum, "word count " + cell(m, n));
      const std::size_t N = words.size(), W = (N + 63) / 64;
      std::vector<oracle::Word> pw;
      for (const auto& w : words) pw.push_back(plain(w));
      std::vector<std::vector<std::uint64_t>> up(N, std::vector<std::uint64_t>(W, 0));
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
          if (a != b && oracle::bub_leq(pw[a], pw[b])) up[a][b / 64] |= std::uint64_t{1} << (b % 64);
      std::map<oracle::Word, std::size_t> index;
      for (std::size_t i = 0; i < N; ++i) index[pw[i]] = i;
      std::vector<std::size_t> degree(N, 0);
      for (std::size_t a = 0; a < N; ++a) {
        auto cov = up[a];
        for (std::size_t b = 0; b < N; ++b)
          if (up[a][b / 64] >> (b % 64) & 1)
            for (std::size_t k = 0; k < W; ++k) cov[k] &= ~up[b][k];
        std::set<std::size_t> want, got;
        for (std::size_t b = 0; b < N; ++b)
          if (cov[b / 64] >> (b % 64) & 1) want.insert(b);
        for (const auto& c : bub_upper_covers(words[a])) got.insert(index.at(plain(c.word)));
        o.require(want == got, "covers of " + to_string(words[a]) + " in " + cell(m, n));
        degree[a] += want.size();
        for (auto b : want) degree[b] += 1;
      }
      for (std::size_t a = 0; a < N; ++a)
        o.require(degree[a] == static_cast<std::size_t>(m + n), "Hasse degree in " + cell(m, n));
    }
  return o;
}

Outcome delta_structure() {
  Outcome o;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      if (m + n == 0) continue;
      auto delta = build_complex(ComplexKind::Delta, {m, n});
      o.require(delta.dim() == m + n - 1 && is_pure(delta), "purity " + cell(m, n));
      o.require(is_thin(delta), "thinness " + cell(m, n));
      o.require(euler(delta) == BigInt((m + n - 1) % 2 ? -1 : 1), "Euler of Delta " + cell(m, n));
      auto h = h_vector(delta);
      auto fg = f_vector(build_complex(ComplexKind::Gamma, {m, n}));
      fg.resize(h.size(), 0);
      o.require(h == fg, "h(Delta) != f(Gamma) " + cell(m, n));
      for (std::size_t i = 0; i < h.size(); ++i)
        o.require(h[i] == h[h.size() - 1 - i], "Dehn-Sommerville " + cell(m, n));
    }
  return o;
}

Outcome gamma_euler() {
  Outcome o;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      auto gamma = build_complex(ComplexKind::Gamma, {m, n});
      auto f = f_vector(gamma);
      BigInt chi = 0;
      for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? 1 : -1) * f[i];
      const BigInt claimed = m == n ? BigInt(n % 2 ? -1 : 1) : BigInt(0);
      o.require(chi == claimed, "reduced Euler characteristic of Gamma" + cell(m, n) + " is " + chi.get_str() +
                                    " (-f(-1)), claimed " + claimed.get_str());
      if (m + n <= 8) {
        MultiPoly diag(kQT);
        const MultiPoly bw = bw_h_triangle(gamma).aligned(kQT);
        for (const auto& [e, c] : bw.terms())
          if (e[1] == 0) diag.add_term(e, c);
        MultiPoly want(kQT);
        if (m == n) want.add_term({n, 0}, 1);
        o.require(diag == want, "Björner-Wachs diagonal " + cell(m, n));
      }
    }
  return o;
}

Outcome shelling() {
  Outcome o;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      Params p{m, n};
      auto delta = build_complex(ComplexKind::Delta, p);
      auto bub = bubble_poset(p);
      auto h = h_vector(delta);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto ext = linear_extension(bub.poset, seed);
        std::vector<Face> order;
        for (auto i : ext) order.push_back(phi(bub.words[i]));
        auto res = check_shelling(delta, order);
        if (!res.ok) {
          o.fail("shelling fails at facet " + std::to_string(res.failure_index) + " " + cell(m, n));
          continue;
        }
        std::vector<BigInt> hist(h.size(), 0);
        for (std::size_t k = 0; k < ext.size(); ++k) {
          const ShuffleWord& w = bub.words[ext[k]];
          const int size = static_cast<int>(res.restrictions[k].size());
          const int in = in_degrees(w).total();
          std::string why = "|Res(F_w)| = " + std::to_string(size) + " but m+n-in(w) = " + std::to_string(m + n - in) +
                            " for w = " + to_string(w) + " at position " + std::to_string(k) + " in " + cell(m, n);
          if (size == in) why += "; observed |Res(F_w)| = in(w), the lower covers";
          o.require(size == m + n - in, why);
          if (size < static_cast<int>(hist.size())) hist[size] += 1;
        }
        o.require(hist == h, "restriction histogram " + cell(m, n));
      }
    }
  return o;
}

using RawFace = std::vector<CVertex>;

RawFace sorted(RawFace f) {
  std::sort(f.begin(), f.end());
  return f;
}

CVertex moved(CVertex v, int dx, int dy) {
  if (v.kind == CVertex::Kind::LoopX) return CVertex::loop_x(v.a + dx);
  if (v.kind == CVertex::Kind::LoopY) return CVertex::loop_y(v.a + dy);
  return CVertex::edge(v.a + dx, v.b + dy);
}

Outcome vertex_decomposability() {
  Outcome o;
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto gamma = build_complex(ComplexKind::Gamma, {m, n});
      auto res = vertex_decomposition(gamma);
      if (!res.found) {
        o.fail("no shedding tree for Gamma" + cell(m, n));
        continue;
      }
      o.require(validate_vd(gamma, res).empty(), "invalid witness " + cell(m, n));
      if (m >= 1) {
        auto chain = deletion_chain(res);
        bool prefix = chain.size() >= static_cast<std::size_t>(n);
        for (int t = 1; prefix && t <= n; ++t) prefix = chain[t - 1] == CVertex::edge(1, t);
        o.require(prefix, "root chain is not x1-y1, ..., x1-yn " + cell(m, n));
      }
    }
  // Link and deletion isomorphisms, reindexed by hand on the brute-force faces.
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      std::set<RawFace> all;
      for (const auto& f : oracle::gamma_faces(m, n)) all.insert(sorted(f));
      for (int s = 1; s <= m; ++s)
        for (int t = 1; t <= n; ++t) {
          const CVertex e = CVertex::edge(s, t);
          std::set<RawFace> link;
          for (const auto& f : all)
            if (!std::count(f.begin(), f.end(), e)) {
              auto g = f;
              g.push_back(e);
              if (all.count(sorted(g))) link.insert(f);
            }
          std::set<RawFace> product;
          for (const auto& a : oracle::gamma_faces(s - 1, t - 1))
            for (const auto& b : oracle::gamma_faces(m - s, n - t)) {
              RawFace g = a;
              for (const auto& v : b) g.push_back(moved(v, s, t));
              product.insert(sorted(g));
            }
          o.require(link == product, "link of x" + std::to_string(s) + "-y" + std::to_string(t) + " " + cell(m, n));
        }
      std::set<RawFace> rest;
      for (const auto& f : all)
        if (std::none_of(f.begin(), f.end(), [](const CVertex& v) { return v.is_edge() && v.a == 1; }))
          rest.insert(f);
      std::set<RawFace> cone;
      for (const auto& b : oracle::gamma_faces(m - 1, n)) {
        RawFace g;
        for (const auto& v : b) g.push_back(moved(v, 1, 0));
        cone.insert(sorted(g));
        g.push_back(CVertex::loop_x(1));
        cone.insert(sorted(g));
      }
      o.require(rest == cone, "deletion of the x1 edges " + cell(m, n));
    }
  return o;
}

Outcome bijections() {
  Outcome o;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      Params p{m, n};
      std::set<Face> labels, facets;
      for (const auto& w : enumerate_words(p)) {
        Face lab = downward_labels(w);
        o.require(word_from_labels(lab, p) == w, "labels of " + to_string(w));
        labels.insert(lab);
        Face f = phi(w);
        o.require(face_to_covering_word(f, p) == w, "facet recovery for " + to_string(w));
        facets.insert(f);
      }
      o.require(labels.size() == count_words(p) && facets.size() == count_words(p), "injectivity " + cell(m, n));
    }
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto plus = build_complex(ComplexKind::GammaPlus, {m, n});
      auto paths0 = enumerate_delannoy(m, n, 0);
      o.require(paths0.size() == plus.faces().size(), "face count " + cell(m, n));
      for (const auto& path : paths0) {
        Face f = face_from_path(path);
        o.require(plus.contains(f) && path_from_face(f, m, n) == path, "face/path " + to_string(path));
      }
      for (int q = 0; q <= 3; ++q) {
        std::set<Flag> flags;
        for (const auto& path : enumerate_delannoy(m, n, q)) {
          Flag fl = flag_from_path(path);
          o.require(path_from_flag(fl, m, n) == path, "flag/path " + to_string(path));
          flags.insert(fl);
        }
        o.require(static_cast<std::int64_t>(flags.size()) == oracle::delannoy_count(m, n, q),
                  "flag count " + cell(m, n));
      }
    }
  auto path = parse_path("N E N D4 N N E D2 E N E D1 E D2 D2 E E D1 N N E", 14, 13, 4);
  auto fl = flag_from_path(path);
  std::vector<std::string> text;
  for (const auto& f : fl) text.push_back(to_string(f));
  const std::vector<std::string> want{
      "{x1-y1, x3-y5, x6-y7, x14-y13}",
      "{x1-y1, x3-y5, x6-y7, x7-y8, x13-y11, x14-y13}",
      "{x1-y1, x3-y5, x4-y6, x6-y7, x7-y8, x9-y9, x10-y10, x13-y11, x14-y13}",
      "{x1-y1, x3-y5, x4-y6, x6-y7, x7-y8, x9-y9, x10-y10, x13-y11, x14-y13}",
      "{x1-y1, x2-y3, x3-y5, x4-y6, x6-y7, x7-y8, x9-y9, x10-y10, x13-y11, x14-y13}",
  };
  o.require(text == want, "worked flag example");
  o.require(path_from_flag(fl, 14, 13) == path, "worked flag example inverse");
  return o;
}

Outcome counts() {
  Outcome o;
  o.require(enumerate_delannoy(2, 2, 2).size() == 22, "|Del_{2,2}(2)|");
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + n <= 8; ++n) {
      auto dplus = build_complex(ComplexKind::DeltaPlus, {m, n});
      const BigInt want(static_cast<unsigned long>(oracle::binom(m + n, n)));
      o.require(BigInt(static_cast<unsigned long>(dplus.facet_count())) == want, "Delta+ facets " + cell(m, n));
      auto shuf = shuffle_poset({m, n});
      auto row = mobius_row(shuf.poset, shuf.index_of(x_word({m, n})));
      const auto mu = row[shuf.index_of(y_word({m, n}))];
      o.require(BigInt(static_cast<long>(mu < 0 ? -mu : mu)) == want, "|mu(bottom, top)| " + cell(m, n));
    }
  for (int n = 1; n <= 6; ++n) {
    auto f = f_vector(build_complex(ComplexKind::LeftLeaning, {n, n}));
    for (int k = 0; k < n; ++k) {
      const std::int64_t nar = oracle::binom(n, k) * oracle::binom(n, k + 1) / n;
      const BigInt got = k < static_cast<int>(f.size()) ? f[k] : BigInt(0);
      o.require(got == BigInt(static_cast<long>(nar)), "left-leaning f_" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome duality() {
  Outcome o;
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) {
      auto a = bubble_poset({m, n}), b = bubble_poset({n, m});
      std::vector<std::size_t> map;
      for (const auto& w : a.words) map.push_back(b.index_of(dualize(w)));
      o.require(check_anti_isomorphism(a.poset, b.poset, map).ok, "letter swap " + cell(m, n));
    }
  for (int n = 0; n <= 3; ++n) {
    auto mt = m_triangle({n, n}, TriangleMode::Definitional).aligned(kQT);
    // (qt)^{2n} M(1/t, 1/q): q^i t^j goes to q^{2n-j} t^{2n-i}.
    MultiPoly dual(kQT);
    for (const auto& [e, c] : mt.terms()) dual.add_term({2 * n - e[1], 2 * n - e[0]}, c);
    o.require(dual == mt, "self-duality of M_{" + std::to_string(n) + "," + std::to_string(n) + "}");
  }
  return o;
}

Outcome lattices() {
  Outcome o;
  for (int m = 0; m <= 7; ++m)
    for (int n = 0; m + n <= 7; ++n) {
      auto b = check_lattice(bubble_poset({m, n}).poset);
      o.require(b.ok, "Bub" + cell(m, n) + ": " + b.failure);
      auto s = check_lattice(shuffle_poset({m, n}).poset);
      o.require(s.ok, "Shuf" + cell(m, n) + ": " + s.failure);
    }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "H, F, M for (2,1) equal the worked examples", worked_examples},
      {2, "F/H identity for m,n <= 5",
       [] { return identity_range({"fh"}, [](int, int) { return true; }, 5); }},
      {3, "extended F/H identity for m+n <= 5",
       [] { return identity_range({"extended_fh"}, [](int m, int n) { return m + n <= 5; }, 5); }},
      {4, "H/M identity and closed M formula for m+n <= 8",
       [] {
         return identity_range({"hm_conjecture", "m_closed_conjecture"}, [](int m, int n) { return m + n <= 8; }, 8);
       }},
      {5, "closed forms of H, F, the characteristic polynomial, and char from H, m,n <= 5", closed_forms},
      {6, "bubble covers, Hasse degrees and word counts for r <= 7", cover_structure},
      {7, "Delta pure, thin, Euler, h(Delta) = f(Gamma), Dehn-Sommerville, m,n <= 4", delta_structure},
      {8, "Euler characteristic of Gamma and the Björner-Wachs diagonal, m,n <= 5", gamma_euler},
      {9, "shellings from 5 linear extensions of Bub, m,n <= 3", shelling},
      {10, "vertex decomposition of Gamma and the link/deletion isomorphisms", vertex_decomposability},
      {11, "label, facet, face/path and flag/path bijections, worked flag example", bijections},
      {12, "Delannoy, Delta+ facet, Möbius and Narayana counts", counts},
      {13, "letter-swap anti-isomorphism and self-duality of M", duality},
      {14, "Bub and Shuf are lattices for r <= 7", lattices},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "criterion " << std::setw(2) << c.id << (o.ok ? " PASS " : " FAIL ") << c.what << " [" << std::fixed
         << std::setprecision(2) << secs << "s]";
    if (!o.ok) {
      line << " -- " << o.detail;
      if (o.failures > 1) line << " (" << o.failures - 1 << " further failed checks)";
    }
    std::cout << line.str() << std::endl;
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
