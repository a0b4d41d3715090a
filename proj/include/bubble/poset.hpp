#pragma once

// Finite posets on index sets 0..N-1, stored as up/down bitsets, and the two
// word posets Bub(m,n) and Shuf(m,n) built on top of them.

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bubble/word.hpp"

namespace bubble {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds from an order predicate, checking the partial-order axioms.
  /// Throws InvalidArgument("not a partial order: ...") with the offending
  /// indices. Cost is quadratic in predicate calls and cubic/64 in bit ops.
  static FinitePoset from_relation(std::size_t n,
                                   const std::function<bool(std::size_t, std::size_t)>& leq);

  /// Builds from a cover relation by transitive closure. Throws if the
  /// relation has a cycle or contains a pair that is not a cover of its closure.
  static FinitePoset from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> covers);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t u, std::size_t v) const { return up_[u].test(v); }
  bool less(std::size_t u, std::size_t v) const { return u != v && leq(u, v); }

  const Bitset& up(std::size_t u) const { return up_[u]; }
  const Bitset& down(std::size_t u) const { return down_[u]; }

  const std::vector<std::size_t>& upper_covers(std::size_t u) const { return upper_[u]; }
  const std::vector<std::size_t>& lower_covers(std::size_t u) const { return lower_[u]; }
  /// All cover pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::size_t cover_count() const;

  /// A fixed linear extension (smallest eligible index first).
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

 private:
  void finish();

  std::vector<Bitset> up_, down_;
  std::vector<std::vector<std::size_t>> upper_, lower_;
  std::vector<std::size_t> topo_;
};

/// Dense Möbius matrix, entries as checked 64-bit integers.
class MobiusMatrix {
 public:
  MobiusMatrix() = default;
  explicit MobiusMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  std::int64_t operator()(std::size_t u, std::size_t v) const { return data_[u * n_ + v]; }
  std::int64_t& at(std::size_t u, std::size_t v) { return data_[u * n_ + v]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

/// Largest poset for which the dense matrix is materialised.
inline constexpr std::size_t kMobiusDenseCap = 8192;

/// mu(u, .) for a fixed u; zero outside the up-set. Throws Error on overflow.
std::vector<std::int64_t> mobius_row(const FinitePoset& p, std::size_t u);
MobiusMatrix mobius(const FinitePoset& p, CapPolicy policy = CapPolicy::enforce);

struct LatticeCheck {
  bool ok = true;
  std::string failure;  // "no join" / "no meet" / "empty"
  std::pair<std::size_t, std::size_t> witness{0, 0};
};
LatticeCheck check_lattice(const FinitePoset& p);

/// Kahn's algorithm picking the (seed mod k)-th of the k eligible minimal
/// elements at every step.
std::vector<std::size_t> linear_extension(const FinitePoset& p, std::uint64_t seed);
bool is_linear_extension(const FinitePoset& p, const std::vector<std::size_t>& order);

/// Sorted indices of [u, v]. Throws InvalidArgument for incomparable endpoints.
std::vector<std::size_t> interval(const FinitePoset& p, std::size_t u, std::size_t v);

struct AntiIsoCheck {
  bool ok = true;
  std::string failure;
  std::pair<std::size_t, std::size_t> witness{0, 0};
};
/// u <=_P v iff map[v] <=_Q map[u], with `map` a bijection P -> Q.
AntiIsoCheck check_anti_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                    const std::vector<std::size_t>& map);

enum class Order { Bubble, Shuffle };

struct WordKey {
  std::uint64_t support = 0;
  std::uint64_t inversions = 0;
  friend bool operator==(const WordKey&, const WordKey&) = default;
};
struct WordKeyHash {
  std::size_t operator()(const WordKey& k) const {
    return std::hash<std::uint64_t>{}(k.support * 0x9e3779b97f4a7c15ULL ^ k.inversions);
  }
};
WordKey word_key(const ShuffleWord& w);

/// Bub(m,n) or Shuf(m,n) on the canonical word enumeration.
struct WordPoset {
  Order order = Order::Bubble;
  Params params;
  std::vector<ShuffleWord> words;
  FinitePoset poset;

  std::size_t index_of(const ShuffleWord& w) const;

  std::unordered_map<WordKey, std::size_t, WordKeyHash> index;
};

/// Built from the cover moves of word.hpp and closed transitively.
WordPoset bubble_poset(Params p, CapPolicy policy = CapPolicy::enforce);
WordPoset shuffle_poset(Params p, CapPolicy policy = CapPolicy::enforce);

/// Built from the direct order tests leq_bub / leq_shuf; used to validate
/// the cover-based construction.
WordPoset word_poset_from_order(Order order, Params p, CapPolicy policy = CapPolicy::enforce);

/// Hasse diagram in DOT, edges lower -> upper. `labels` adds the bubble
/// cover labels and is rejected for the shuffle order.
std::string to_dot(const WordPoset& wp, bool labels);
std::string to_json(const WordPoset& wp, bool labels);

}  // namespace bubble
