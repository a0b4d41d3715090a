#include "bubble/complex.hpp"

#include <algorithm>
#include <bit>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bubble {

std::string_view to_string(ComplexKind k) {
  switch (k) {
    case ComplexKind::Gamma:
      return "gamma";
    case ComplexKind::GammaPlus:
      return "gamma+";
    case ComplexKind::Delta:
      return "delta";
    case ComplexKind::DeltaPlus:
      return "delta+";
    case ComplexKind::LeftLeaning:
      return "left";
    case ComplexKind::Derived:
      break;
  }
  return "derived";
}

namespace {

using MaskSet = std::unordered_set<FaceMask>;

bool subset(FaceMask a, FaceMask b) { return (a & ~b) == 0; }

// Lexicographic order of the sorted vertex lists encoded by two masks.
bool lex_less(FaceMask a, FaceMask b) {
  FaceMask x = a ^ b;
  if (x == 0) return false;
  int i = std::countr_zero(x);
  if ((a >> i) & 1U) return (b >> i) != 0;
  return (a >> i) == 0;
}

std::vector<FaceMask> maximal(std::vector<FaceMask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::stable_sort(masks.begin(), masks.end(), [](FaceMask a, FaceMask b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<FaceMask> kept;
  std::size_t larger_end = 0;  // kept[0, larger_end) are strictly larger than the current size
  int current = -1;
  for (FaceMask m : masks) {
    int sz = std::popcount(m);
    if (sz != current) {
      larger_end = kept.size();
      current = sz;
    }
    bool dominated = false;
    for (std::size_t i = 0; i < larger_end && !dominated; ++i) dominated = subset(m, kept[i]);
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

MaskSet face_set(const std::vector<FaceMask>& facets) {
  MaskSet faces;
  std::size_t estimate = 0;
  for (FaceMask g : facets) estimate += std::size_t{1} << std::min(std::popcount(g), 20);
  faces.reserve(std::min<std::size_t>(estimate, std::size_t{1} << 24));
  for (FaceMask g : facets) {
    // submasks of g, including g and 0
    FaceMask s = g;
    while (true) {
      faces.insert(s);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  return faces;
}

}  // namespace

Complex::Complex(ComplexKind kind, Params p, std::vector<Face> facets) : kind_(kind), params_(p) {
  for (const Face& f : facets) vertices_.insert(vertices_.end(), f.begin(), f.end());
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.size() > 64) throw InvalidArgument("complex has more than 64 vertices");
  std::vector<FaceMask> masks;
  masks.reserve(facets.size());
  for (const Face& f : facets) masks.push_back(mask_of(f));
  facets_ = maximal(std::move(masks));
  std::sort(facets_.begin(), facets_.end(), lex_less);
}

std::optional<int> Complex::vertex_index(const CVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Face> Complex::facets() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (FaceMask m : facets_) out.push_back(face_of(m));
  return out;
}

FaceMask Complex::mask_of(const Face& f) const {
  FaceMask m = 0;
  for (const CVertex& v : f) {
    auto i = vertex_index(v);
    if (!i) throw InvalidArgument("vertex " + to_string(v) + " is not in the ground set");
    m |= FaceMask{1} << *i;
  }
  return m;
}

Face Complex::face_of(FaceMask mask) const {
  Face f;
  for (; mask; mask &= mask - 1) f.push_back(vertices_[std::countr_zero(mask)]);
  return f;
}

bool Complex::contains_mask(FaceMask mask) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceMask g) { return subset(mask, g); });
}

bool Complex::contains(const Face& f) const {
  FaceMask m = 0;
  for (const CVertex& v : f) {
    auto i = vertex_index(v);
    if (!i) return false;
    m |= FaceMask{1} << *i;
  }
  return contains_mask(m);
}

std::vector<FaceMask> Complex::face_masks() const {
  MaskSet s = face_set(facets_);
  std::vector<FaceMask> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<Face> Complex::faces() const {
  std::vector<Face> out;
  for (FaceMask m : face_masks()) out.push_back(face_of(m));
  return out;
}

int Complex::dim() const {
  int d = 0;
  for (FaceMask g : facets_) d = std::max(d, std::popcount(g));
  return d - 1;
}

bool same_complex(const Complex& a, const Complex& b) {
  auto fa = a.facets(), fb = b.facets();
  std::sort(fa.begin(), fa.end());
  std::sort(fb.begin(), fb.end());
  return fa == fb;
}

namespace {

// Canonical vertex list of Gamma(m,n) and the matching bit positions.
struct GammaUniverse {
  Params p;
  std::vector<CVertex> vertices;

  explicit GammaUniverse(Params pp) : p(pp) {
    for (int s = 1; s <= p.m; ++s) vertices.push_back(CVertex::loop_x(s));
    for (int t = 1; t <= p.n; ++t) vertices.push_back(CVertex::loop_y(t));
    for (int s = 1; s <= p.m; ++s)
      for (int t = 1; t <= p.n; ++t) vertices.push_back(CVertex::edge(s, t));
  }
  int bit(const CVertex& v) const {
    switch (v.kind) {
      case CVertex::Kind::LoopX:
        return v.a - 1;
      case CVertex::Kind::LoopY:
        return p.m + v.a - 1;
      case CVertex::Kind::Edge:
        break;
    }
    return p.m + p.n + (v.a - 1) * p.n + (v.b - 1);
  }
  FaceMask mask(const Face& f) const {
    FaceMask m = 0;
    for (const auto& v : f) m |= FaceMask{1} << bit(v);
    return m;
  }
  Face face(FaceMask m) const {
    Face f;
    for (; m; m &= m - 1) f.push_back(vertices[std::countr_zero(m)]);
    return f;
  }
  FaceMask loop_bits() const { return (FaceMask{1} << (p.m + p.n)) - 1; }
};

// Faces of a down-closed family with no one-vertex extension inside it.
std::vector<Face> maximal_faces(const MaskSet& faces, const GammaUniverse& u) {
  std::vector<Face> out;
  const int nv = static_cast<int>(u.vertices.size());
  for (FaceMask f : faces) {
    bool is_max = true;
    for (int b = 0; b < nv && is_max; ++b) {
      FaceMask bit = FaceMask{1} << b;
      if (!(f & bit) && faces.count(f | bit)) is_max = false;
    }
    if (is_max) out.push_back(u.face(f));
  }
  return out;
}

MaskSet gamma_face_set(Params p, const GammaUniverse& u, CapPolicy policy) {
  MaskSet faces;
  for (const ShuffleWord& w : enumerate_words(p, policy)) faces.insert(u.mask(downward_labels(w)));
  return faces;
}

}  // namespace

Complex build_complex(ComplexKind kind, Params p, CapPolicy policy) {
  if (p.m < 0 || p.n < 0) throw InvalidArgument("m and n must be nonnegative");
  switch (kind) {
    case ComplexKind::Gamma:
    case ComplexKind::GammaPlus:
    case ComplexKind::LeftLeaning: {
      if (kind == ComplexKind::LeftLeaning && p.m != p.n) {
        throw InvalidArgument("the left-leaning complex needs m = n");
      }
      require_within_cap("m+n", p.r(), kGammaCap, policy);
      GammaUniverse u(p);
      MaskSet faces = gamma_face_set(p, u, policy);
      if (kind != ComplexKind::Gamma) {
        MaskSet kept;
        for (FaceMask f : faces) {
          if (f & u.loop_bits()) continue;
          if (kind == ComplexKind::LeftLeaning) {
            Face face = u.face(f);
            if (!std::all_of(face.begin(), face.end(), [](const CVertex& v) { return v.a > v.b; })) {
              continue;
            }
          }
          kept.insert(f);
        }
        faces = std::move(kept);
      }
      return Complex(kind, p, maximal_faces(faces, u));
    }
    case ComplexKind::Delta:
    case ComplexKind::DeltaPlus: {
      require_within_cap("m+n", p.r(), kDeltaCap, policy);
      std::vector<Face> facets;
      for (const ShuffleWord& w : enumerate_words(p, policy)) {
        Face f = phi(w);
        if (kind == ComplexKind::DeltaPlus) std::erase_if(f, [](const CVertex& v) { return v.is_loop(); });
        facets.push_back(std::move(f));
      }
      return Complex(kind, p, std::move(facets));
    }
    case ComplexKind::Derived:
      break;
  }
  throw InvalidArgument("cannot build a derived complex directly");
}

Face phi(const ShuffleWord& w) {
  const Params p = w.params();
  std::vector<CVertex> out;
  int last_x = 0, last_y = 0;
  for (const Letter& l : w.letters()) {
    if (l.is_x()) {
      out.push_back(CVertex::edge(l.index, last_y));
      last_x = l.index;
    } else {
      out.push_back(CVertex::edge(last_x, l.index));
      last_y = l.index;
    }
  }
  for (int s = 1; s <= p.m; ++s)
    if (!w.contains(Letter::x(s))) out.push_back(CVertex::loop_x(s));
  for (int t = 1; t <= p.n; ++t)
    if (!w.contains(Letter::y(t))) out.push_back(CVertex::loop_y(t));
  return make_face(std::move(out));
}

namespace {

// Word of a tree component: the single edge gives x y, otherwise the leaf
// among the two largest letters is peeled off and appended.
std::vector<Letter> tree_word(std::vector<CVertex> edges) {
  if (edges.size() == 1) return {Letter::x(edges[0].a), Letter::y(edges[0].b)};
  int s = 0, t = 0;
  for (const auto& e : edges) {
    s = std::max(s, e.a);
    t = std::max(t, e.b);
  }
  auto top = std::find(edges.begin(), edges.end(), CVertex::edge(s, t));
  if (top == edges.end()) throw Error("tree component without an edge between its largest letters");
  auto deg_x = std::count_if(edges.begin(), edges.end(), [&](const CVertex& e) { return e.a == s; });
  auto deg_y = std::count_if(edges.begin(), edges.end(), [&](const CVertex& e) { return e.b == t; });
  Letter leaf;
  if (deg_x == 1) {
    leaf = Letter::x(s);
  } else if (deg_y == 1) {
    leaf = Letter::y(t);
  } else {
    throw Error("tree component without a leaf among its largest letters");
  }
  edges.erase(top);
  auto word = tree_word(std::move(edges));
  word.push_back(leaf);
  return word;
}

}  // namespace

ShuffleWord face_to_covering_word(const Face& sigma, Params p) {
  if (!is_delta_face(sigma, p)) throw InvalidArgument("not a Delta-face: " + to_string(sigma));
  // union-find on x0..xm (ids 0..m) and y0..yn (ids m+1..m+n+1)
  std::vector<int> parent(p.m + p.n + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<CVertex> edges;
  for (const auto& v : sigma) {
    if (!v.is_edge()) continue;
    edges.push_back(v);
    parent[find(v.a)] = find(p.m + 1 + v.b);
  }
  std::vector<std::pair<int, std::vector<CVertex>>> comps;  // (min x index, edges)
  std::unordered_map<int, std::size_t> slot;
  for (const auto& e : edges) {
    int root = find(e.a);
    auto [it, fresh] = slot.emplace(root, comps.size());
    if (fresh) comps.push_back({e.a, {}});
    auto& comp = comps[it->second];
    comp.first = std::min(comp.first, e.a);
    comp.second.push_back(e);
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Letter> word;
  for (auto& [lo, es] : comps) {
    for (const Letter& l : tree_word(std::move(es)))
      if (l.index != 0) word.push_back(l);
  }
  return ShuffleWord(p, std::move(word));
}

std::pair<ShuffleWord, ShuffleWord> vertex_interval(const CVertex& v, Params p) {
  if (!is_delta_face({v}, p)) throw InvalidArgument("not a vertex of Delta: " + to_string(v));
  std::vector<Letter> lo, hi;
  switch (v.kind) {
    case CVertex::Kind::LoopX:
      for (int s = 1; s <= p.m; ++s)
        if (s != v.a) lo.push_back(Letter::x(s));
      return {ShuffleWord(p, lo), y_word(p)};
    case CVertex::Kind::LoopY:
      for (int t = 1; t <= p.n; ++t)
        if (t != v.a) hi.push_back(Letter::y(t));
      return {x_word(p), ShuffleWord(p, hi)};
    case CVertex::Kind::Edge:
      break;
  }
  const int s = v.a, t = v.b;
  for (int i = 1; i <= s; ++i) lo.push_back(Letter::x(i));
  if (t > 0) lo.push_back(Letter::y(t));
  for (int i = s + 1; i <= p.m; ++i) lo.push_back(Letter::x(i));
  for (int j = 1; j <= t; ++j) hi.push_back(Letter::y(j));
  if (s > 0) hi.push_back(Letter::x(s));
  for (int j = t + 1; j <= p.n; ++j) hi.push_back(Letter::y(j));
  return {ShuffleWord(p, lo), ShuffleWord(p, hi)};
}

KInterval k_interval(const Face& sigma, const WordPoset& bub) {
  if (bub.order != Order::Bubble) throw InvalidArgument("k_interval needs the bubble order");
  if (!is_delta_face(sigma, bub.params)) throw InvalidArgument("not a Delta-face: " + to_string(sigma));
  KInterval res;
  Face s = make_face(sigma);
  for (std::size_t i = 0; i < bub.words.size(); ++i) {
    Face f = phi(bub.words[i]);
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) res.members.push_back(i);
  }
  const FinitePoset& P = bub.poset;
  auto extreme = [&](bool lower) -> std::optional<std::size_t> {
    for (std::size_t c : res.members) {
      bool all = std::all_of(res.members.begin(), res.members.end(), [&](std::size_t o) {
        return lower ? P.leq(c, o) : P.leq(o, c);
      });
      if (all) return c;
    }
    return std::nullopt;
  };
  auto lo = extreme(true), hi = extreme(false);
  if (lo && hi) {
    res.min = bub.words[*lo];
    res.max = bub.words[*hi];
    res.is_interval = interval(P, *lo, *hi) == res.members;
  }
  return res;
}

std::vector<BigInt> f_vector(const Complex& c) {
  std::vector<BigInt> f(static_cast<std::size_t>(c.dim() + 2), 0);
  if (c.facet_masks().empty()) return {0};
  for (FaceMask m : face_set(c.facet_masks())) f[std::popcount(m)] += 1;
  return f;
}

std::vector<BigInt> h_from_f(const std::vector<BigInt>& f, int d) {
  std::vector<BigInt> h(static_cast<std::size_t>(d + 1), 0);
  for (int i = 0; i <= d; ++i) {
    for (int k = 0; k <= i && k < static_cast<int>(f.size()); ++k) {
      BigInt term = binomial(d - k, d - i) * f[k];
      if ((i - k) % 2) h[i] -= term;
      else h[i] += term;
    }
  }
  return h;
}

std::vector<BigInt> h_vector(const Complex& c) { return h_from_f(f_vector(c), c.dim() + 1); }

BigInt euler(const Complex& c) {
  BigInt chi = 0;
  auto f = f_vector(c);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i % 2) chi += f[i];
    else chi -= f[i];
  }
  return chi;
}

Complex link(const Complex& c, const Face& f) {
  if (!c.contains(f)) throw InvalidArgument("face not in complex: " + to_string(f));
  FaceMask m = c.mask_of(f);
  std::vector<Face> fs;
  for (FaceMask g : c.facet_masks())
    if (subset(m, g)) fs.push_back(c.face_of(g & ~m));
  return Complex(ComplexKind::Derived, c.params(), std::move(fs));
}

Complex deletion(const Complex& c, const Face& f) {
  if (f.empty()) throw InvalidArgument("cannot delete the empty face");
  if (!c.contains(f)) throw InvalidArgument("face not in complex: " + to_string(f));
  FaceMask m = c.mask_of(f);
  std::vector<Face> fs;
  for (FaceMask g : c.facet_masks()) {
    if (!subset(m, g)) {
      fs.push_back(c.face_of(g));
      continue;
    }
    for (FaceMask b = m; b; b &= b - 1) fs.push_back(c.face_of(g & ~(b & -b)));
  }
  return Complex(ComplexKind::Derived, c.params(), std::move(fs));
}

Complex join(const Complex& a, const Complex& b) {
  for (const auto& v : a.vertices())
    if (b.vertex_index(v)) throw InvalidArgument("join needs disjoint ground sets; shared " + to_string(v));
  std::vector<Face> fs;
  for (const Face& fa : a.facets()) {
    for (const Face& fb : b.facets()) {
      Face u = fa;
      u.insert(u.end(), fb.begin(), fb.end());
      fs.push_back(make_face(std::move(u)));
    }
  }
  Params p{std::max(a.params().m, b.params().m), std::max(a.params().n, b.params().n)};
  return Complex(ComplexKind::Derived, p, std::move(fs));
}

Complex shift(const Complex& c, int dx, int dy, Params p) {
  return relabel(
      c,
      [&](const CVertex& v) {
        switch (v.kind) {
          case CVertex::Kind::LoopX:
            return CVertex::loop_x(v.a + dx);
          case CVertex::Kind::LoopY:
            return CVertex::loop_y(v.a + dy);
          case CVertex::Kind::Edge:
            break;
        }
        return CVertex::edge(v.a + dx, v.b + dy);
      },
      p);
}

bool is_pure(const Complex& c) {
  const auto& fs = c.facet_masks();
  return std::all_of(fs.begin(), fs.end(),
                     [&](FaceMask g) { return std::popcount(g) == std::popcount(fs.front()); });
}

bool is_flag(const Complex& c) {
  MaskSet faces = face_set(c.facet_masks());
  const int nv = static_cast<int>(c.vertex_count());
  std::vector<FaceMask> adj(nv, 0);
  for (FaceMask f : faces) {
    if (std::popcount(f) != 2) continue;
    int a = std::countr_zero(f), b = 63 - std::countl_zero(f);
    adj[a] |= FaceMask{1} << b;
    adj[b] |= FaceMask{1} << a;
  }
  // Every clique is reached from a smaller clique by adding a larger vertex.
  for (FaceMask f : faces) {
    int start = f ? 64 - std::countl_zero(f) : 0;
    for (int v = start; v < nv; ++v) {
      if ((adj[v] & f) == f && !faces.count(f | (FaceMask{1} << v))) return false;
    }
  }
  return true;
}

bool is_thin(const Complex& c) {
  const auto& fs = c.facet_masks();
  for (FaceMask g : fs) {
    for (FaceMask b = g; b; b &= b - 1) {
      FaceMask ridge = g & ~(b & -b);
      auto count = std::count_if(fs.begin(), fs.end(), [&](FaceMask h) { return subset(ridge, h); });
      if (count != 2) return false;
    }
  }
  return true;
}

Structure structural_checks(const Complex& c) { return {is_flag(c), is_pure(c), is_thin(c)}; }

ShellingResult check_shelling(const Complex& c, const std::vector<Face>& order) {
  std::vector<FaceMask> seq;
  seq.reserve(order.size());
  for (const Face& f : order) seq.push_back(c.mask_of(make_face(f)));
  {
    auto a = seq, b = c.facet_masks();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InvalidArgument("not a permutation of facets");
  }
  ShellingResult res;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const FaceMask fk = seq[k];
    const int need = std::popcount(fk) - 1;
    // vertices v with fk \ v an intersection with an earlier facet
    FaceMask restriction = 0;
    for (std::size_t i = 0; i < k; ++i) {
      FaceMask inter = seq[i] & fk;
      if (std::popcount(inter) == need) restriction |= fk & ~inter;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (((fk & ~seq[i]) & restriction) == 0) {
        res.ok = false;
        res.failure_index = k;
        res.restrictions.clear();
        return res;
      }
    }
    res.restrictions.push_back(c.face_of(restriction));
  }
  res.ok = true;
  return res;
}

int face_degree(const Complex& c, FaceMask f) {
  int d = -1;
  for (FaceMask g : c.facet_masks())
    if (subset(f, g)) d = std::max(d, std::popcount(g));
  return d;
}

BWTables bw_tables(const Complex& c) {
  const int d = c.dim() + 1;
  std::unordered_map<FaceMask, int> degree;
  for (FaceMask g : c.facet_masks()) {
    const int sz = std::popcount(g);
    FaceMask s = g;
    while (true) {
      auto [it, fresh] = degree.emplace(s, sz);
      if (!fresh) it->second = std::max(it->second, sz);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  BWTables t;
  t.f.assign(d + 1, std::vector<BigInt>(d + 1, 0));
  t.h.assign(d + 1, std::vector<BigInt>(d + 1, 0));
  for (auto [mask, deg] : degree) t.f[deg][std::popcount(mask)] += 1;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = 0; k <= j; ++k) {
        BigInt term = binomial(i - k, j - k) * t.f[i][k];
        if ((j - k) % 2) t.h[i][j] -= term;
        else t.h[i][j] += term;
      }
    }
  }
  return t;
}

std::vector<std::vector<std::size_t>> dual_graph(const Complex& c) {
  if (!is_pure(c)) throw InvalidArgument("complex not pure");
  const auto& fs = c.facet_masks();
  std::unordered_map<FaceMask, std::vector<std::size_t>> by_ridge;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (FaceMask b = fs[i]; b; b &= b - 1) by_ridge[fs[i] & ~(b & -b)].push_back(i);
  std::vector<std::vector<std::size_t>> adj(fs.size());
  for (const auto& [ridge, owners] : by_ridge) {
    for (std::size_t a = 0; a < owners.size(); ++a)
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        adj[owners[a]].push_back(owners[b]);
        adj[owners[b]].push_back(owners[a]);
      }
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return adj;
}

std::string to_json(const Complex& c) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(c.kind()));
  j["m"] = c.params().m;
  j["n"] = c.params().n;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : c.vertices()) vs.push_back(to_string(v));
  auto& fs = j["facets"] = nlohmann::ordered_json::array();
  for (const Face& f : c.facets()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : f) arr.push_back(to_string(v));
    fs.push_back(std::move(arr));
  }
  return j.dump(2) + "\n";
}

std::string fvector_text(const Complex& c) {
  std::string out;
  for (const BigInt& x : f_vector(c)) {
    if (!out.empty()) out += ' ';
    out += x.get_str();
  }
  return out;
}

}  // namespace bubble
