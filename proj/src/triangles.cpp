#include "bubble/triangles.hpp"

#include <bit>

namespace bubble {

namespace {

const std::vector<std::string> kQT{"q", "t"};

MultiPoly q_poly() { return MultiPoly::variable("q").aligned(kQT); }
MultiPoly t_poly() { return MultiPoly::variable("t").aligned(kQT); }
MultiPoly c_poly(long c) { return MultiPoly::constant(c, kQT); }

// Binomial sum  sum_a C(m,a) C(n,a) term(a).
template <class Term>
MultiPoly binomial_sum(Params p, Term term) {
  MultiPoly out(kQT);
  for (int a = 0; a <= std::min(p.m, p.n); ++a) {
    out += MultiPoly::constant(binomial(p.m, a) * binomial(p.n, a), kQT) * term(a);
  }
  return out.aligned(kQT);
}

MultiPoly from_table(const std::vector<std::vector<BigInt>>& tab) {
  MultiPoly out(kQT);
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = 0; j < tab[i].size(); ++j) out.add_term({static_cast<int>(i), static_cast<int>(j)}, tab[i][j]);
  return out;
}

// Splits a face mask of c into (#edges, loop letters).
struct VertexKinds {
  FaceMask edges = 0;
  std::vector<int> slot;  // extended-variable slot of each loop, -1 for edges
};

VertexKinds vertex_kinds(const Complex& c) {
  VertexKinds k;
  const Params p = c.params();
  for (std::size_t i = 0; i < c.vertex_count(); ++i) {
    const CVertex& v = c.vertices()[i];
    if (v.is_edge()) {
      k.edges |= FaceMask{1} << i;
      k.slot.push_back(-1);
    } else {
      k.slot.push_back(v.kind == CVertex::Kind::LoopX ? v.a : p.m + v.a);
    }
  }
  return k;
}

}  // namespace

MultiPoly h_triangle_def(const std::vector<ShuffleWord>& words) {
  MultiPoly out(kQT);
  for (const ShuffleWord& w : words) {
    InDegrees d = in_degrees(w);
    out.add_term({d.total(), d.indel}, 1);
  }
  return out;
}

MultiPoly h_triangle_closed(Params p) {
  const MultiPoly q = q_poly(), qt1 = q_poly() * t_poly() + c_poly(1);
  return binomial_sum(p, [&](int a) { return pow(q, a) * pow(qt1, p.r() - 2 * a); });
}

MultiPoly f_triangle_def(const Complex& delta) {
  const VertexKinds k = vertex_kinds(delta);
  std::vector<std::vector<BigInt>> tab(delta.vertex_count() + 1, std::vector<BigInt>(delta.vertex_count() + 1, 0));
  for (FaceMask f : delta.face_masks()) {
    const int e = std::popcount(f & k.edges);
    tab[e][std::popcount(f) - e] += 1;
  }
  return from_table(tab);
}

MultiPoly f_triangle_closed(Params p) {
  const MultiPoly q = q_poly(), q1 = q_poly() + c_poly(1), qt1 = q_poly() + t_poly() + c_poly(1);
  return binomial_sum(p, [&](int a) { return pow(q, a) * pow(q1, a) * pow(qt1, p.r() - 2 * a); });
}

std::string t_var(Letter l) { return "t_" + to_string(l); }

std::vector<std::string> extended_vars(Params p) {
  std::vector<std::string> vars{"q"};
  for (int s = 1; s <= p.m; ++s) vars.push_back(t_var(Letter::x(s)));
  for (int t = 1; t <= p.n; ++t) vars.push_back(t_var(Letter::y(t)));
  return vars;
}

MultiPoly extended_f_def(const Complex& delta) {
  const Params p = delta.params();
  const VertexKinds k = vertex_kinds(delta);
  MultiPoly out(extended_vars(p));
  Exps e(static_cast<std::size_t>(p.r() + 1));
  for (FaceMask f : delta.face_masks()) {
    std::fill(e.begin(), e.end(), 0);
    e[0] = std::popcount(f & k.edges);
    for (FaceMask b = f & ~k.edges; b; b &= b - 1) e[k.slot[std::countr_zero(b)]] = 1;
    out.add_term(e, 1);
  }
  return out;
}

MultiPoly extended_h_def(const std::vector<ShuffleWord>& words, Params p) {
  MultiPoly out(extended_vars(p));
  Exps e(static_cast<std::size_t>(p.r() + 1));
  for (const ShuffleWord& w : words) {
    std::fill(e.begin(), e.end(), 0);
    const Face labels = downward_labels(w);
    e[0] = static_cast<int>(labels.size());
    for (const CVertex& v : labels) {
      if (v.kind == CVertex::Kind::LoopX) ++e[v.a];
      if (v.kind == CVertex::Kind::LoopY) ++e[p.m + v.a];
    }
    out.add_term(e, 1);
  }
  return out;
}

MultiPoly collapse_extended(const MultiPoly& ext, Params p) {
  MultiPoly out(kQT);
  const MultiPoly aligned = ext.aligned(extended_vars(p));
  for (const auto& [e, c] : aligned.terms()) {
    int t = 0;
    for (std::size_t i = 1; i < e.size(); ++i) t += e[i];
    out.add_term({e[0], t}, c);
  }
  return out;
}

MultiPoly m_triangle_def(const WordPoset& shuf) {
  const std::size_t n = shuf.words.size();
  const int r = shuf.params.r();
  std::vector<int> rk(n);
  for (std::size_t i = 0; i < n; ++i) rk[i] = shuf_rank(shuf.words[i]);
  std::vector<std::vector<BigInt>> tab(r + 1, std::vector<BigInt>(r + 1, 0));
  for (std::size_t u = 0; u < n; ++u) {
    auto row = mobius_row(shuf.poset, u);
    std::vector<std::int64_t> by_rank(r + 1, 0);
    for (std::size_t v = 0; v < n; ++v) by_rank[rk[v]] += row[v];
    for (int j = 0; j <= r; ++j) tab[rk[u]][j] += BigInt(static_cast<long>(by_rank[j]));
  }
  return from_table(tab);
}

MultiPoly m_triangle_closed(Params p) {
  const MultiPoly q = q_poly(), t = t_poly(), one = c_poly(1);
  const MultiPoly base = t * (one - t) * (q - one), tail = q * t - t + one;
  return binomial_sum(p, [&](int a) { return pow(base, a) * pow(tail, p.r() - 2 * a); });
}

MultiPoly char_poly_def(const WordPoset& shuf) {
  auto bottom = shuf.poset.bottom();
  if (!bottom) throw InvalidArgument("shuffle poset has no bottom element");
  auto row = mobius_row(shuf.poset, *bottom);
  MultiPoly out({"q"});
  for (std::size_t v = 0; v < row.size(); ++v) {
    if (row[v] != 0) out.add_term({shuf_rank(shuf.words[v])}, BigInt(static_cast<long>(row[v])));
  }
  return out;
}

MultiPoly char_poly_closed(Params p) {
  const MultiPoly q = MultiPoly::variable("q"), one = MultiPoly::constant(1, {"q"});
  MultiPoly out({"q"});
  for (int a = 0; a <= std::min(p.m, p.n); ++a) {
    out += MultiPoly::constant(binomial(p.m, a) * binomial(p.n, a), {"q"}) * pow(-q, a) * pow(one - q, p.r() - a);
  }
  return out.aligned({"q"});
}

MultiPoly bw_f_triangle(const Complex& c) {
  auto tab = bw_tables(c).f;
  MultiPoly out(kQT);
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = 0; j <= i && j < tab[i].size(); ++j)
      out.add_term({static_cast<int>(i), static_cast<int>(i - j)}, tab[i][j]);
  return out;
}

MultiPoly bw_h_triangle(const Complex& c) {
  auto tab = bw_tables(c).h;
  MultiPoly out(kQT);
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = 0; j <= i && j < tab[i].size(); ++j)
      out.add_term({static_cast<int>(i), static_cast<int>(i - j)}, tab[i][j]);
  return out;
}

MultiPoly bw_f_gamma_closed(const MultiPoly& h, Params p) {
  MultiPoly out(kQT);
  const MultiPoly hq = h.aligned(kQT);
  for (const auto& [e, c] : hq.terms()) out.add_term({p.r() - e[0] + e[1], e[1]}, c);
  return out;
}

MultiPoly bw_h_gamma_closed(const MultiPoly& h, Params p) {
  const MultiPoly t1 = t_poly() - c_poly(1);
  MultiPoly out(kQT);
  const MultiPoly hq = h.aligned(kQT);
  for (const auto& [e, c] : hq.terms()) {
    MultiPoly mono(kQT);
    mono.add_term({p.r() - e[0] + e[1], 0}, c);
    out += mono * pow(t1, e[1]);
  }
  return out.aligned(kQT);
}

MultiPoly f_polynomial(const Complex& c) {
  MultiPoly out({"q"});
  auto f = f_vector(c);
  for (std::size_t i = 0; i < f.size(); ++i) out.add_term({static_cast<int>(i)}, f[i]);
  return out;
}

MultiPoly h_polynomial(const Complex& c) {
  MultiPoly out({"q"});
  auto h = h_vector(c);
  for (std::size_t i = 0; i < h.size(); ++i) out.add_term({static_cast<int>(i)}, h[i]);
  return out;
}

MultiPoly h_triangle(Params p, TriangleMode mode, CapPolicy policy) {
  if (mode == TriangleMode::Closed) return h_triangle_closed(p);
  return h_triangle_def(enumerate_words(p, policy));
}

MultiPoly f_triangle(Params p, TriangleMode mode, CapPolicy policy) {
  if (mode == TriangleMode::Closed) return f_triangle_closed(p);
  return f_triangle_def(build_complex(ComplexKind::Delta, p, policy));
}

MultiPoly m_triangle(Params p, TriangleMode mode, CapPolicy policy) {
  if (mode == TriangleMode::Closed) return m_triangle_closed(p);
  require_within_cap("m+n", p.r(), kMobiusCap, policy);
  return m_triangle_def(shuffle_poset(p, policy));
}

MultiPoly char_poly(Params p, TriangleMode mode, CapPolicy policy) {
  if (mode == TriangleMode::Closed) return char_poly_closed(p);
  require_within_cap("m+n", p.r(), kMobiusCap, policy);
  return char_poly_def(shuffle_poset(p, policy));
}

MultiPoly extended_f(Params p, CapPolicy policy) {
  require_within_cap("m+n", p.r(), kExtendedCap, policy);
  return extended_f_def(build_complex(ComplexKind::Delta, p, policy));
}

MultiPoly extended_h(Params p, CapPolicy policy) {
  require_within_cap("m+n", p.r(), kExtendedCap, policy);
  return extended_h_def(enumerate_words(p, policy), p);
}

}  // namespace bubble
