#include "bubble/vertex_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace bubble {

namespace {

using Mask = std::uint32_t;

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Candidate order: edges by (x, y), then loops.
bool priority_less(const CVertex& a, const CVertex& b) {
  if (a.is_edge() != b.is_edge()) return a.is_edge();
  return a < b;
}

struct Internal {
  bool leaf = true;
  int vertex = -1;  // local index of the shedding vertex
  int link = -1, deletion = -1;
  std::vector<int> link_map, deletion_map;  // child local index -> parent local index
};

class Search {
 public:
  explicit Search(std::size_t budget) : budget_(budget) {}

  // Facets sorted, over local vertices 0..nv-1 (all of which occur).
  std::optional<int> solve(const std::vector<Mask>& facets, int nv) {
    std::vector<Mask> key = facets;
    key.push_back(static_cast<Mask>(nv));
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second < 0) return std::nullopt;
      return it->second;
    }
    if (++explored_ > budget_) {
      exhausted_ = true;
      return std::nullopt;
    }
    std::optional<int> result;
    if (facets.size() == 1) {
      nodes_.push_back(Internal{});
      result = static_cast<int>(nodes_.size() - 1);
    } else {
      for (int v = 0; v < nv && !result; ++v) result = try_shed(facets, nv, v);
    }
    if (result || !exhausted_) memo_[key] = result ? *result : -1;
    return result;
  }

  bool exhausted() const { return exhausted_; }
  std::size_t explored() const { return memo_.size(); }
  const std::vector<Internal>& nodes() const { return nodes_; }

 private:
  static std::pair<std::vector<Mask>, std::vector<int>> compress(std::vector<Mask> fs) {
    Mask used = 0;
    for (Mask f : fs) used |= f;
    std::vector<int> map;
    std::vector<int> where(32, -1);
    for (Mask u = used; u; u &= u - 1) {
      where[std::countr_zero(u)] = static_cast<int>(map.size());
      map.push_back(std::countr_zero(u));
    }
    for (Mask& f : fs) {
      Mask g = 0;
      for (Mask b = f; b; b &= b - 1) g |= Mask{1} << where[std::countr_zero(b)];
      f = g;
    }
    std::sort(fs.begin(), fs.end());
    return {fs, map};
  }

  std::optional<int> try_shed(const std::vector<Mask>& facets, int nv, int v) {
    (void)nv;
    const Mask bit = Mask{1} << v;
    std::vector<Mask> with, without;
    for (Mask f : facets) (f & bit ? with : without).push_back(f);
    // VD3: every link facet must be a non-facet of the deletion.
    for (Mask g : with) {
      Mask r = g & ~bit;
      if (!std::any_of(without.begin(), without.end(), [&](Mask h) { return subset(r, h); })) {
        return std::nullopt;
      }
    }
    std::vector<Mask> link;
    for (Mask g : with) link.push_back(g & ~bit);
    auto [lf, lmap] = compress(std::move(link));
    auto l = solve(lf, static_cast<int>(lmap.size()));
    if (!l) return std::nullopt;
    auto [df, dmap] = compress(without);
    auto d = solve(df, static_cast<int>(dmap.size()));
    if (!d) return std::nullopt;
    Internal node;
    node.leaf = false;
    node.vertex = v;
    node.link = *l;
    node.deletion = *d;
    node.link_map = std::move(lmap);
    node.deletion_map = std::move(dmap);
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size() - 1);
  }

  std::size_t budget_;
  std::size_t explored_ = 0;
  bool exhausted_ = false;
  std::map<std::vector<Mask>, int> memo_;
  std::vector<Internal> nodes_;
};

int resolve(const std::vector<Internal>& in, int id, const std::vector<CVertex>& labels,
            std::vector<VDNode>& out) {
  const Internal& node = in[id];
  int me = static_cast<int>(out.size());
  out.push_back(VDNode{});
  if (node.leaf) return me;
  std::vector<CVertex> ll, dl;
  for (int i : node.link_map) ll.push_back(labels[i]);
  for (int i : node.deletion_map) dl.push_back(labels[i]);
  int l = resolve(in, node.link, ll, out);
  int d = resolve(in, node.deletion, dl, out);
  out[me] = VDNode{false, labels[node.vertex], l, d};
  return me;
}

}  // namespace

VDResult vertex_decomposition(const Complex& c, const VDOptions& opts) {
  require_within_cap("vertex count", static_cast<long long>(c.vertex_count()),
                     static_cast<long long>(kVdVertexCap), opts.policy);
  if (c.vertex_count() > 32) throw InvalidArgument("vertex decomposition search supports at most 32 vertices");
  VDResult res;
  if (c.facet_masks().empty()) return res;
  std::vector<CVertex> labels = c.vertices();
  std::sort(labels.begin(), labels.end(), priority_less);
  std::vector<Mask> facets;
  for (const Face& f : c.facets()) {
    Mask m = 0;
    for (const CVertex& v : f) {
      auto pos = std::lower_bound(labels.begin(), labels.end(), v, priority_less) - labels.begin();
      m |= Mask{1} << pos;
    }
    facets.push_back(m);
  }
  std::sort(facets.begin(), facets.end());
  Search search(opts.node_budget);
  auto root = search.solve(facets, static_cast<int>(labels.size()));
  res.explored = search.explored();
  res.budget_exhausted = !root && search.exhausted();
  if (root) {
    res.found = true;
    resolve(search.nodes(), *root, labels, res.nodes);
  }
  return res;
}

namespace {

std::string check_node(const Complex& c, const std::vector<VDNode>& nodes, int id) {
  if (id < 0 || id >= static_cast<int>(nodes.size())) return "dangling node reference";
  const VDNode& node = nodes[id];
  if (node.leaf) {
    return c.facet_count() == 1 ? "" : "leaf is not a simplex";
  }
  if (!c.vertex_index(node.vertex)) return "shedding vertex " + to_string(node.vertex) + " not in complex";
  Complex l = link(c, {node.vertex});
  Complex d = deletion(c, {node.vertex});
  auto lf = l.facets(), df = d.facets();
  std::sort(lf.begin(), lf.end());
  std::sort(df.begin(), df.end());
  std::vector<Face> shared;
  std::set_intersection(lf.begin(), lf.end(), df.begin(), df.end(), std::back_inserter(shared));
  if (!shared.empty()) {
    return "link and deletion of " + to_string(node.vertex) + " share facet " + to_string(shared.front());
  }
  if (auto e = check_node(l, nodes, node.link); !e.empty()) return e;
  return check_node(d, nodes, node.deletion);
}

}  // namespace

std::string validate_vd(const Complex& c, const VDResult& witness) {
  if (!witness.found || witness.nodes.empty()) return "no witness";
  return check_node(c, witness.nodes, 0);
}

std::vector<CVertex> deletion_chain(const VDResult& witness) {
  std::vector<CVertex> chain;
  if (!witness.found) return chain;
  for (int id = 0; id >= 0 && !witness.nodes[id].leaf; id = witness.nodes[id].deletion) {
    chain.push_back(witness.nodes[id].vertex);
  }
  return chain;
}

}  // namespace bubble
