#include "bubble/poset.hpp"

#include <algorithm>
#include <json.hpp>
#include <queue>
#include <sstream>

namespace bubble {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Kahn's algorithm, smallest eligible index first. Empty result means a cycle.
std::vector<std::size_t> kahn(const std::vector<std::vector<std::size_t>>& upper,
                              const std::vector<std::vector<std::size_t>>& lower) {
  const std::size_t n = upper.size();
  std::vector<std::size_t> indeg(n);
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = lower[v].size();
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t u = ready.top();
    ready.pop();
    order.push_back(u);
    for (std::size_t v : upper[u])
      if (--indeg[v] == 0) ready.push(v);
  }
  if (order.size() != n) order.clear();
  return order;
}

}  // namespace

FinitePoset FinitePoset::from_relation(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  p.up_.assign(n, Bitset(n));
  p.down_.assign(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (leq(u, v)) {
        p.up_[u].set(v);
        p.down_[v].set(u);
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (!p.up_[u].test(u)) throw InvalidArgument("not a partial order: reflexivity fails at " + idx(u));
    for (std::size_t v = p.up_[u].find_next(u); v != Bitset::npos; v = p.up_[u].find_next(v)) {
      if (p.up_[v].test(u)) {
        throw InvalidArgument("not a partial order: antisymmetry fails for (" + idx(u) + ", " +
                              idx(v) + ")");
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = p.up_[u].find_first(); v != Bitset::npos; v = p.up_[u].find_next(v)) {
      if (!p.up_[v].is_subset_of(p.up_[u])) {
        Bitset missing = p.up_[v] - p.up_[u];
        throw InvalidArgument("not a partial order: transitivity fails for (" + idx(u) + ", " +
                              idx(v) + ", " + idx(missing.find_first()) + ")");
      }
    }
  }
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = p.up_[u].find_first(); v != Bitset::npos; v = p.up_[u].find_next(v)) {
      if (v == u) continue;
      if ((p.up_[u] & p.down_[v]).count() == 2) {
        p.upper_[u].push_back(v);
        p.lower_[v].push_back(u);
      }
    }
  }
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_covers(std::size_t n,
                                     std::vector<std::pair<std::size_t, std::size_t>> covers) {
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  FinitePoset p;
  p.upper_.assign(n, {});
  p.lower_.assign(n, {});
  for (auto [u, v] : covers) {
    if (u >= n || v >= n || u == v) throw InvalidArgument("bad cover pair (" + idx(u) + ", " + idx(v) + ")");
    p.upper_[u].push_back(v);
    p.lower_[v].push_back(u);
  }
  p.finish();
  if (p.topo_.size() != n) throw InvalidArgument("not a partial order: cover relation has a cycle");
  p.up_.assign(n, Bitset(n));
  p.down_.assign(n, Bitset(n));
  for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
    std::size_t u = *it;
    p.up_[u].set(u);
    for (std::size_t v : p.upper_[u]) p.up_[u] |= p.up_[v];
  }
  for (std::size_t v : p.topo_) {
    p.down_[v].set(v);
    for (std::size_t u : p.lower_[v]) p.down_[v] |= p.down_[u];
  }
  for (auto [u, v] : covers) {
    if ((p.up_[u] & p.down_[v]).count() != 2) {
      throw InvalidArgument("(" + idx(u) + ", " + idx(v) + ") is not a cover of the generated order");
    }
  }
  return p;
}

void FinitePoset::finish() {
  for (auto& c : upper_) std::sort(c.begin(), c.end());
  for (auto& c : lower_) std::sort(c.begin(), c.end());
  topo_ = kahn(upper_, lower_);
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v : upper_[u]) out.emplace_back(u, v);
  return out;
}

std::size_t FinitePoset::cover_count() const {
  std::size_t c = 0;
  for (const auto& u : upper_) c += u.size();
  return c;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  if (topo_.empty()) return std::nullopt;
  std::size_t b = topo_.front();
  if (up_[b].count() == size()) return b;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  if (topo_.empty()) return std::nullopt;
  std::size_t t = topo_.back();
  if (down_[t].count() == size()) return t;
  return std::nullopt;
}

std::vector<std::int64_t> mobius_row(const FinitePoset& p, std::size_t u) {
  std::vector<std::int64_t> mu(p.size(), 0);
  const Bitset& ups = p.up(u);
  mu[u] = 1;
  for (std::size_t v : p.topological_order()) {
    if (v == u || !ups.test(v)) continue;
    Bitset below = p.down(v) & ups;
    below.reset(v);
    std::int64_t sum = 0;
    for (std::size_t w = below.find_first(); w != Bitset::npos; w = below.find_next(w)) {
      if (__builtin_add_overflow(sum, mu[w], &sum)) throw Error("Möbius value overflows 64 bits");
    }
    if (sum == INT64_MIN) throw Error("Möbius value overflows 64 bits");
    mu[v] = -sum;
  }
  return mu;
}

MobiusMatrix mobius(const FinitePoset& p, CapPolicy policy) {
  require_within_cap("poset size", static_cast<long long>(p.size()),
                     static_cast<long long>(kMobiusDenseCap), policy);
  MobiusMatrix m(p.size());
  for (std::size_t u = 0; u < p.size(); ++u) {
    auto row = mobius_row(p, u);
    for (std::size_t v = 0; v < p.size(); ++v) m.at(u, v) = row[v];
  }
  return m;
}

LatticeCheck check_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  LatticeCheck res;
  if (n == 0) {
    res.ok = false;
    res.failure = "empty";
    return res;
  }
  // Re-index so that bit position = position in a linear extension; the
  // least upper bound candidate is then the first set bit of the common
  // up-set and the greatest lower bound the first set bit of the reversed
  // common down-set.
  const auto& topo = p.topological_order();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[topo[i]] = i;
  std::vector<Bitset> up(n, Bitset(n)), down(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = p.up(u).find_first(); v != Bitset::npos; v = p.up(u).find_next(v)) {
      up[u].set(pos[v]);
      down[v].set(n - 1 - pos[u]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p.leq(a, b) || p.leq(b, a)) continue;
      Bitset s = up[a] & up[b];
      std::size_t z = s.find_first();
      if (z == Bitset::npos || !s.is_subset_of(up[topo[z]])) {
        return {false, "no join", {a, b}};
      }
      Bitset t = down[a] & down[b];
      std::size_t w = t.find_first();
      if (w == Bitset::npos || !t.is_subset_of(down[topo[n - 1 - w]])) {
        return {false, "no meet", {a, b}};
      }
    }
  }
  return res;
}

std::vector<std::size_t> linear_extension(const FinitePoset& p, std::uint64_t seed) {
  const std::size_t n = p.size();
  std::vector<std::size_t> indeg(n);
  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = p.lower_covers(v).size();
    if (indeg[v] == 0) eligible.push_back(v);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!eligible.empty()) {
    auto it = eligible.begin() + static_cast<std::ptrdiff_t>(seed % eligible.size());
    std::size_t u = *it;
    eligible.erase(it);
    order.push_back(u);
    for (std::size_t v : p.upper_covers(u)) {
      if (--indeg[v] == 0) eligible.insert(std::lower_bound(eligible.begin(), eligible.end(), v), v);
    }
  }
  return order;
}

bool is_linear_extension(const FinitePoset& p, const std::vector<std::size_t>& order) {
  const std::size_t n = p.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v : p.upper_covers(u))
      if (pos[u] > pos[v]) return false;
  return true;
}

std::vector<std::size_t> interval(const FinitePoset& p, std::size_t u, std::size_t v) {
  if (!p.leq(u, v)) throw InvalidArgument("incomparable endpoints " + idx(u) + ", " + idx(v));
  Bitset b = p.up(u) & p.down(v);
  std::vector<std::size_t> out;
  for (std::size_t w = b.find_first(); w != Bitset::npos; w = b.find_next(w)) out.push_back(w);
  return out;
}

AntiIsoCheck check_anti_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                    const std::vector<std::size_t>& map) {
  const std::size_t n = p.size();
  if (q.size() != n || map.size() != n) return {false, "size mismatch", {0, 0}};
  std::vector<bool> hit(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    if (map[u] >= n || hit[map[u]]) return {false, "not a bijection", {u, u}};
    hit[map[u]] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (p.leq(u, v) != q.leq(map[v], map[u])) return {false, "order not reversed", {u, v}};
  return {};
}

WordKey word_key(const ShuffleWord& w) {
  return {std::uint64_t{w.x_mask()} | (std::uint64_t{w.y_mask()} << 32), w.inv_mask()};
}

std::size_t WordPoset::index_of(const ShuffleWord& w) const {
  auto it = index.find(word_key(w));
  if (it == index.end() || !(w.params() == params)) {
    throw InvalidArgument("word " + to_string(w) + " not in this poset");
  }
  return it->second;
}

namespace {

inline constexpr int kPosetCap = 10;

WordPoset start(Order order, Params p, CapPolicy policy) {
  require_within_cap("m+n", p.r(), kPosetCap, policy);
  WordPoset wp;
  wp.order = order;
  wp.params = p;
  wp.words = enumerate_words(p, policy);
  wp.index.reserve(wp.words.size());
  for (std::size_t i = 0; i < wp.words.size(); ++i) wp.index.emplace(word_key(wp.words[i]), i);
  return wp;
}

}  // namespace

WordPoset bubble_poset(Params p, CapPolicy policy) {
  WordPoset wp = start(Order::Bubble, p, policy);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < wp.words.size(); ++i)
    for (const Cover& c : bub_upper_covers(wp.words[i])) covers.emplace_back(i, wp.index_of(c.word));
  wp.poset = FinitePoset::from_covers(wp.words.size(), std::move(covers));
  return wp;
}

WordPoset shuffle_poset(Params p, CapPolicy policy) {
  WordPoset wp = start(Order::Shuffle, p, policy);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < wp.words.size(); ++i)
    for (const ShuffleWord& w : shuf_upper_covers(wp.words[i])) covers.emplace_back(i, wp.index_of(w));
  wp.poset = FinitePoset::from_covers(wp.words.size(), std::move(covers));
  return wp;
}

WordPoset word_poset_from_order(Order order, Params p, CapPolicy policy) {
  WordPoset wp = start(order, p, policy);
  const auto& ws = wp.words;
  if (order == Order::Bubble) {
    wp.poset = FinitePoset::from_relation(ws.size(), [&](std::size_t u, std::size_t v) {
      return leq_bub(ws[u], ws[v]);
    });
  } else {
    wp.poset = FinitePoset::from_relation(ws.size(), [&](std::size_t u, std::size_t v) {
      return leq_shuf(ws[u], ws[v]);
    });
  }
  return wp;
}

namespace {

void require_labels_ok(const WordPoset& wp, bool labels) {
  if (labels && wp.order != Order::Bubble) {
    throw InvalidArgument("cover labels are only defined for the bubble order");
  }
}

}  // namespace

std::string to_dot(const WordPoset& wp, bool labels) {
  require_labels_ok(wp, labels);
  std::ostringstream out;
  out << "digraph {\n  rankdir=BT;\n";
  for (const auto& w : wp.words) out << "  \"" << to_string(w) << "\";\n";
  for (auto [u, v] : wp.poset.covers()) {
    out << "  \"" << to_string(wp.words[u]) << "\" -> \"" << to_string(wp.words[v]) << '"';
    if (labels) out << " [label=\"" << to_string(cover_label(wp.words[u], wp.words[v])) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const WordPoset& wp, bool labels) {
  require_labels_ok(wp, labels);
  nlohmann::ordered_json j;
  j["order"] = wp.order == Order::Bubble ? "bub" : "shuf";
  j["m"] = wp.params.m;
  j["n"] = wp.params.n;
  auto& elems = j["elements"] = nlohmann::ordered_json::array();
  for (const auto& w : wp.words) elems.push_back(to_string(w));
  auto& covs = j["covers"] = nlohmann::ordered_json::array();
  for (auto [u, v] : wp.poset.covers()) {
    nlohmann::ordered_json c = {{"lower", u}, {"upper", v}};
    if (labels) c["label"] = to_string(cover_label(wp.words[u], wp.words[v]));
    covs.push_back(std::move(c));
  }
  return j.dump(2) + "\n";
}

}  // namespace bubble
