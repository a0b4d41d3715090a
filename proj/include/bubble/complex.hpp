#pragma once

// Simplicial complexes on loop/edge vertices: the noncrossing matching
// complex Gamma(m,n), the noncrossing bipartite complex Delta(m,n), their
// loop-free parts, the left-leaning complex, and generic operations.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bubble/error.hpp"
#include "bubble/numeric.hpp"
#include "bubble/poset.hpp"
#include "bubble/vertex.hpp"
#include "bubble/word.hpp"

namespace bubble {

enum class ComplexKind { Gamma, GammaPlus, Delta, DeltaPlus, LeftLeaning, Derived };

std::string_view to_string(ComplexKind k);

inline constexpr int kDeltaCap = 12;
inline constexpr int kGammaCap = 14;

/// Faces are bitmasks over the ground set, so at most 64 vertices.
using FaceMask = std::uint64_t;

class Complex {
 public:
  /// The complex {emptyset}.
  Complex() : facets_{0} {}

  /// Facets may be given redundantly; duplicates and non-maximal faces are
  /// dropped. The ground set is the union of the facets.
  Complex(ComplexKind kind, Params p, std::vector<Face> facets);

  ComplexKind kind() const { return kind_; }
  Params params() const { return params_; }

  const std::vector<CVertex>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::optional<int> vertex_index(const CVertex& v) const;

  /// Facets in lexicographic order of their sorted vertex lists.
  const std::vector<FaceMask>& facet_masks() const { return facets_; }
  std::vector<Face> facets() const;
  std::size_t facet_count() const { return facets_.size(); }

  /// Throws InvalidArgument if a vertex is outside the ground set.
  FaceMask mask_of(const Face& f) const;
  Face face_of(FaceMask mask) const;

  bool contains(const Face& f) const;
  bool contains_mask(FaceMask mask) const;

  /// Every face including the empty one, sorted by size and then by mask.
  std::vector<FaceMask> face_masks() const;
  std::vector<Face> faces() const;

  /// Largest facet size minus one; -1 for {emptyset}.
  int dim() const;

 private:
  ComplexKind kind_ = ComplexKind::Derived;
  Params params_{};
  std::vector<CVertex> vertices_;
  std::vector<FaceMask> facets_;
};

/// Same facet set (as vertex sets); kind and params are ignored.
bool same_complex(const Complex& a, const Complex& b);

/// Gamma: faces are the downward label sets of all words. Delta: facets are
/// phi(w). GammaPlus / DeltaPlus: loop-free faces. LeftLeaning uses p.m = p.n
/// and keeps the loop-free faces of Gamma(n,n) whose edges all have s > t.
Complex build_complex(ComplexKind kind, Params p, CapPolicy policy = CapPolicy::enforce);

/// Facet of Delta(m,n) attached to a word: loops at absent letters; each
/// present letter joined to the last earlier letter of the other kind in
/// x0 y0 w.
Face phi(const ShuffleWord& w);

/// A word w with sigma contained in phi(w), built by peeling leaves off the
/// tree components of sigma. Throws InvalidArgument for non-faces of Delta.
ShuffleWord face_to_covering_word(const Face& sigma, Params p);

/// Bubble interval of the words whose facet contains the single vertex v.
std::pair<ShuffleWord, ShuffleWord> vertex_interval(const CVertex& v, Params p);

struct KInterval {
  ShuffleWord min, max;
  std::vector<std::size_t> members;  // indices into bub.words, sorted
  bool is_interval = false;          // members == [min, max] in Bub
};
/// {w : sigma subset of phi(w)} by exhaustive scan, with its extremes.
KInterval k_interval(const Face& sigma, const WordPoset& bub);

/// f[i] = number of faces with i vertices (so f[0] = 1 counts the empty face).
std::vector<BigInt> f_vector(const Complex& c);
/// h[0..d] with d = dim + 1.
std::vector<BigInt> h_vector(const Complex& c);
std::vector<BigInt> h_from_f(const std::vector<BigInt>& f, int d);
/// Reduced Euler characteristic -f(-1).
BigInt euler(const Complex& c);

/// Throws InvalidArgument if f is not a face.
Complex link(const Complex& c, const Face& f);
/// Faces not containing f.
Complex deletion(const Complex& c, const Face& f);
/// Ground sets must be disjoint.
Complex join(const Complex& a, const Complex& b);
/// Maps every vertex through `map`; the result must stay injective.
template <class F>
Complex relabel(const Complex& c, F&& map, Params p) {
  std::vector<Face> fs;
  for (const Face& f : c.facets()) {
    Face g;
    for (const CVertex& v : f) g.push_back(map(v));
    fs.push_back(make_face(std::move(g)));
  }
  return Complex(ComplexKind::Derived, p, std::move(fs));
}
/// Adds dx to every x index and dy to every y index.
Complex shift(const Complex& c, int dx, int dy, Params p);

struct Structure {
  bool flag = false;
  bool pure = false;
  bool thin = false;
};
/// thin: every face obtained by removing one vertex from a facet lies in
/// exactly two facets (a single positive-dimensional simplex is not thin).
Structure structural_checks(const Complex& c);
bool is_flag(const Complex& c);
bool is_pure(const Complex& c);
bool is_thin(const Complex& c);

struct ShellingResult {
  bool ok = false;
  std::size_t failure_index = 0;   // first k at which the order fails
  std::vector<Face> restrictions;  // Res(F_1), Res(F_2), ... on success
};
/// Throws InvalidArgument if `order` is not a permutation of the facets.
ShellingResult check_shelling(const Complex& c, const std::vector<Face>& order);

/// f[i][j]: faces with degree i and size j; h from the Björner-Wachs transform.
struct BWTables {
  std::vector<std::vector<BigInt>> f, h;
};
BWTables bw_tables(const Complex& c);
/// Largest facet size over facets containing the face.
int face_degree(const Complex& c, FaceMask f);

/// Adjacency lists over facet indices; facets adjacent iff they share a
/// ridge. Throws InvalidArgument for non-pure complexes.
std::vector<std::vector<std::size_t>> dual_graph(const Complex& c);

std::string to_json(const Complex& c);
/// "1 5 5".
std::string fvector_text(const Complex& c);

}  // namespace bubble
