#pragma once

// Shuffle words over x_1..x_m, y_1..y_n: order tests for the bubble and
// shuffle orders, the cover moves of the bubble lattice, and the bijection
// between words and faces of the noncrossing matching complex.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bubble/error.hpp"
#include "bubble/vertex.hpp"

namespace bubble {

/// Largest m+n accepted by word enumeration without `CapPolicy::ignore`.
inline constexpr int kWordCap = 16;

/// An order-preserving, duplicate-free word over x_1..x_m, y_1..y_n.
///
/// Construction validates the word. The support and inversion set are cached
/// as bitmasks: bit s-1 of `x_mask` for x_s, bit t-1 of `y_mask` for y_t,
/// bit (s-1)*n + (t-1) of `inv_mask` for the pair (x_s, y_t).
class ShuffleWord {
 public:
  ShuffleWord() = default;
  ShuffleWord(Params p, std::vector<Letter> letters);

  Params params() const { return params_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  std::uint32_t x_mask() const { return x_mask_; }
  std::uint32_t y_mask() const { return y_mask_; }
  std::uint64_t inv_mask() const { return inv_mask_; }

  bool contains(Letter l) const {
    return l.is_x() ? (x_mask_ >> (l.index - 1)) & 1U : (y_mask_ >> (l.index - 1)) & 1U;
  }

  friend bool operator==(const ShuffleWord& a, const ShuffleWord& b) {
    return a.params_ == b.params_ && a.letters_ == b.letters_;
  }

 private:
  Params params_{};
  std::vector<Letter> letters_;
  std::uint32_t x_mask_ = 0;
  std::uint32_t y_mask_ = 0;
  std::uint64_t inv_mask_ = 0;
};

/// Space-separated letters, "-" for the empty word.
std::string to_string(const ShuffleWord& w);
ShuffleWord parse_word(std::string_view text, Params p);

/// x_1 x_2 ... x_m and y_1 y_2 ... y_n.
ShuffleWord x_word(Params p);
ShuffleWord y_word(Params p);

/// Number of shuffle words: sum_a C(m,a) C(n,a) 2^(m+n-2a).
std::uint64_t count_words(Params p);

/// Every word exactly once, ordered by support bitmask (x bits low, y bits
/// high) and then by sorted inversion list, lexicographically.
std::vector<ShuffleWord> enumerate_words(Params p, CapPolicy policy = CapPolicy::enforce);

/// Strict-weak ordering realising the canonical enumeration order.
bool canonical_less(const ShuffleWord& a, const ShuffleWord& b);

/// Pairs (s, t) with y_t occurring before x_s, sorted.
using InversionSet = std::vector<std::pair<int, int>>;
InversionSet inversion_set(const ShuffleWord& w);

/// Subsequence of `u` keeping exactly the letters that occur in `v`.
ShuffleWord restrict_to(const ShuffleWord& u, const ShuffleWord& v);

bool leq_bub(const ShuffleWord& u, const ShuffleWord& v);
bool leq_shuf(const ShuffleWord& u, const ShuffleWord& v);

enum class MoveKind { Transposition, RightIndel };

std::string_view to_string(MoveKind k);

struct Cover {
  ShuffleWord word;
  MoveKind kind;
  CVertex label;  // label of the cover edge, oriented lower -> upper
};

/// Upper covers of `w` in the bubble lattice: forward transpositions of an
/// adjacent x y pair, deletions of an x followed by an x (or last), and
/// insertions of an absent y right before the next larger present y (or at
/// the end of the word when no larger y is present).
std::vector<Cover> bub_upper_covers(const ShuffleWord& w);
std::vector<Cover> bub_lower_covers(const ShuffleWord& w);

/// Upper covers in the shuffle lattice: every single x deletion and every
/// single y insertion at an order-preserving position.
std::vector<ShuffleWord> shuf_upper_covers(const ShuffleWord& w);

struct InterfaceResidue {
  std::vector<Letter> interface;
  std::vector<Letter> residue;
};
InterfaceResidue interface_residue(const ShuffleWord& w);

struct InDegrees {
  int transpose = 0;  // lower covers reached by a transposition
  int indel = 0;      // lower covers reached by a right indel
  int total() const { return transpose + indel; }
};
InDegrees in_degrees(const ShuffleWord& w);

/// Label of the bubble cover u < v. Throws InvalidArgument if v does not cover u.
CVertex cover_label(const ShuffleWord& u, const ShuffleWord& v);

/// Labels of all lower covers of `w`; always a face of Gamma(m,n).
Face downward_labels(const ShuffleWord& w);

/// Inverse of downward_labels. Throws InvalidArgument for non-faces of Gamma.
ShuffleWord word_from_labels(const Face& sigma, Params p);

/// Letter swap x_s -> y_s, y_t -> x_t with positions kept; maps Shuf(m,n)
/// onto Shuf(n,m) and reverses the bubble order.
ShuffleWord dualize(const ShuffleWord& w);

/// Rank in the shuffle lattice: (m - #x) + #y.
int shuf_rank(const ShuffleWord& w);

}  // namespace bubble
