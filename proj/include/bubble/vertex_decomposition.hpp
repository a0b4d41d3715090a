#pragma once

// Search for a vertex decomposition (shedding-vertex tree) of a small complex.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bubble/complex.hpp"

namespace bubble {

inline constexpr std::size_t kVdVertexCap = 20;

/// Node of a shedding tree. Leaves are simplices (including {emptyset});
/// inner nodes name a shedding vertex and point at the witnesses for its
/// link and deletion.
struct VDNode {
  bool leaf = true;
  CVertex vertex{};
  int link = -1;
  int deletion = -1;
};

struct VDResult {
  bool found = false;
  bool budget_exhausted = false;  // search stopped before deciding
  std::vector<VDNode> nodes;      // nodes[0] is the root when found
  std::size_t explored = 0;       // distinct subcomplexes examined
};

struct VDOptions {
  std::size_t node_budget = 2'000'000;
  CapPolicy policy = CapPolicy::enforce;
};

/// Depth-first search with memoisation on relabelled facet lists. Candidate
/// shedding vertices are tried edges first, in (x, y) order, then loops, so
/// on Gamma(m,n) the first chain tried is {x1,y1}, {x1,y2}, ..., {x1,yn}.
VDResult vertex_decomposition(const Complex& c, const VDOptions& opts = {});

/// Re-checks a witness against VD1-VD3 using link/deletion of complex.hpp.
/// Returns an empty string when valid, else a description of the defect.
std::string validate_vd(const Complex& c, const VDResult& witness);

/// Shedding vertices along the chain of deletions from the root.
std::vector<CVertex> deletion_chain(const VDResult& witness);

}  // namespace bubble
