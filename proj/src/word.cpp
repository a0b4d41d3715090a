#include "bubble/word.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bubble {

ShuffleWord::ShuffleWord(Params p, std::vector<Letter> letters)
    : params_(p), letters_(std::move(letters)) {
  if (p.m < 0 || p.n < 0 || p.m > 32 || p.n > 32 || p.m * p.n > 64) {
    throw InvalidArgument("parameters (" + std::to_string(p.m) + "," + std::to_string(p.n) +
                          ") are outside the supported range (m,n <= 32, m*n <= 64)");
  }
  int last_x = 0, last_y = 0;
  for (const Letter& l : letters_) {
    int bound = l.is_x() ? p.m : p.n;
    if (l.index < 1 || l.index > bound) {
      throw InvalidArgument("letter " + to_string(l) + " out of range");
    }
    int& last = l.is_x() ? last_x : last_y;
    if (l.index <= last) {
      throw InvalidArgument("letters not strictly increasing at " + to_string(l));
    }
    last = l.index;
    if (l.is_x()) {
      x_mask_ |= 1U << (l.index - 1);
      // every y already seen precedes this x
      for (std::uint32_t ys = y_mask_; ys; ys &= ys - 1) {
        int t = std::countr_zero(ys) + 1;
        inv_mask_ |= std::uint64_t{1} << ((l.index - 1) * p.n + (t - 1));
      }
    } else {
      y_mask_ |= 1U << (l.index - 1);
    }
  }
}

std::string to_string(const ShuffleWord& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

ShuffleWord parse_word(std::string_view text, Params p) {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    if (tok == "-") continue;
    letters.push_back(parse_letter(tok));
  }
  return ShuffleWord(p, std::move(letters));
}

ShuffleWord x_word(Params p) {
  std::vector<Letter> ls;
  for (int s = 1; s <= p.m; ++s) ls.push_back(Letter::x(s));
  return ShuffleWord(p, std::move(ls));
}

ShuffleWord y_word(Params p) {
  std::vector<Letter> ls;
  for (int t = 1; t <= p.n; ++t) ls.push_back(Letter::y(t));
  return ShuffleWord(p, std::move(ls));
}

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

void interleave(Params p, const std::vector<Letter>& xs, const std::vector<Letter>& ys,
                std::size_t i, std::size_t j, std::vector<Letter>& cur,
                std::vector<ShuffleWord>& out) {
  if (i == xs.size() && j == ys.size()) {
    out.emplace_back(p, cur);
    return;
  }
  if (i < xs.size()) {
    cur.push_back(xs[i]);
    interleave(p, xs, ys, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < ys.size()) {
    cur.push_back(ys[j]);
    interleave(p, xs, ys, i, j + 1, cur, out);
    cur.pop_back();
  }
}

std::uint64_t support_key(const ShuffleWord& w) {
  return std::uint64_t{w.x_mask()} | (std::uint64_t{w.y_mask()} << w.params().m);
}

// Inversion pairs are encoded so that numeric order is lexicographic (s, t) order.
std::vector<int> inversion_codes(const ShuffleWord& w) {
  std::vector<int> codes;
  for (std::uint64_t b = w.inv_mask(); b; b &= b - 1) codes.push_back(std::countr_zero(b));
  return codes;
}

}  // namespace

std::uint64_t count_words(Params p) {
  std::uint64_t total = 0;
  for (int a = 0; a <= std::min(p.m, p.n); ++a) {
    total += binom(p.m, a) * binom(p.n, a) * (std::uint64_t{1} << (p.m + p.n - 2 * a));
  }
  return total;
}

bool canonical_less(const ShuffleWord& a, const ShuffleWord& b) {
  auto ka = support_key(a), kb = support_key(b);
  if (ka != kb) return ka < kb;
  auto ca = inversion_codes(a), cb = inversion_codes(b);
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<ShuffleWord> enumerate_words(Params p, CapPolicy policy) {
  if (p.m < 0 || p.n < 0) throw InvalidArgument("m and n must be nonnegative");
  require_within_cap("m+n", p.r(), kWordCap, policy);
  std::vector<ShuffleWord> out;
  out.reserve(count_words(p));
  std::vector<Letter> cur;
  for (std::uint32_t xs = 0; xs < (1U << p.m); ++xs) {
    for (std::uint32_t ys = 0; ys < (1U << p.n); ++ys) {
      std::vector<Letter> xl, yl;
      for (int s = 1; s <= p.m; ++s)
        if ((xs >> (s - 1)) & 1U) xl.push_back(Letter::x(s));
      for (int t = 1; t <= p.n; ++t)
        if ((ys >> (t - 1)) & 1U) yl.push_back(Letter::y(t));
      interleave(p, xl, yl, 0, 0, cur, out);
    }
  }
  // Sort with precomputed keys; comparing through canonical_less directly
  // would rebuild the inversion lists on every comparison.
  struct Keyed {
    std::uint64_t support;
    std::vector<int> inv;
    std::size_t idx;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    keyed.push_back({support_key(out[i]), inversion_codes(out[i]), i});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.support != b.support) return a.support < b.support;
    return a.inv < b.inv;
  });
  std::vector<ShuffleWord> sorted;
  sorted.reserve(out.size());
  for (const auto& k : keyed) sorted.push_back(std::move(out[k.idx]));
  return sorted;
}

InversionSet inversion_set(const ShuffleWord& w) {
  InversionSet inv;
  const int n = w.params().n;
  for (int code : inversion_codes(w)) inv.emplace_back(code / n + 1, code % n + 1);
  return inv;
}

ShuffleWord restrict_to(const ShuffleWord& u, const ShuffleWord& v) {
  std::vector<Letter> kept;
  for (const Letter& l : u.letters())
    if (v.contains(l)) kept.push_back(l);
  return ShuffleWord(u.params(), std::move(kept));
}

namespace {

std::uint64_t pair_mask(std::uint32_t xs, std::uint32_t ys, int n) {
  std::uint64_t mask = 0;
  for (; xs; xs &= xs - 1) {
    int s0 = std::countr_zero(xs);
    mask |= std::uint64_t{ys} << (s0 * n);
  }
  return mask;
}

bool is_subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

}  // namespace

bool leq_bub(const ShuffleWord& u, const ShuffleWord& v) {
  if (!is_subset(v.x_mask(), u.x_mask()) || !is_subset(u.y_mask(), v.y_mask())) return false;
  std::uint64_t common = pair_mask(v.x_mask(), u.y_mask(), u.params().n);
  return is_subset(u.inv_mask() & common, v.inv_mask() & common);
}

bool leq_shuf(const ShuffleWord& u, const ShuffleWord& v) {
  if (!is_subset(v.x_mask(), u.x_mask()) || !is_subset(u.y_mask(), v.y_mask())) return false;
  std::uint64_t common = pair_mask(v.x_mask(), u.y_mask(), u.params().n);
  return (u.inv_mask() & common) == (v.inv_mask() & common);
}

std::string_view to_string(MoveKind k) {
  return k == MoveKind::Transposition ? "transposition" : "right-indel";
}

namespace {

std::vector<Letter> with_inserted(std::span<const Letter> ls, std::size_t pos, Letter l) {
  std::vector<Letter> out(ls.begin(), ls.end());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), l);
  return out;
}

std::vector<Letter> with_erased(std::span<const Letter> ls, std::size_t pos) {
  std::vector<Letter> out(ls.begin(), ls.end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

// Slot right before the first present letter of `kind` with index > idx,
// or the end of the word when there is none.
std::size_t right_slot(std::span<const Letter> ls, LetterKind kind, int idx) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].kind == kind && ls[i].index > idx) return i;
  return ls.size();
}

}  // namespace

std::vector<Cover> bub_upper_covers(const ShuffleWord& w) {
  const Params p = w.params();
  auto ls = w.letters();
  std::vector<Cover> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].is_x()) continue;
    bool last = i + 1 == ls.size();
    if (!last && ls[i + 1].is_y()) {
      std::vector<Letter> sw(ls.begin(), ls.end());
      std::swap(sw[i], sw[i + 1]);
      out.push_back({ShuffleWord(p, std::move(sw)), MoveKind::Transposition,
                     CVertex::edge(ls[i].index, ls[i + 1].index)});
    } else {
      out.push_back({ShuffleWord(p, with_erased(ls, i)), MoveKind::RightIndel,
                     CVertex::loop_x(ls[i].index)});
    }
  }
  for (int t = 1; t <= p.n; ++t) {
    if (w.contains(Letter::y(t))) continue;
    std::size_t slot = right_slot(ls, LetterKind::Y, t);
    out.push_back({ShuffleWord(p, with_inserted(ls, slot, Letter::y(t))), MoveKind::RightIndel,
                   CVertex::loop_y(t)});
  }
  return out;
}

std::vector<Cover> bub_lower_covers(const ShuffleWord& w) {
  const Params p = w.params();
  auto ls = w.letters();
  std::vector<Cover> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].is_y()) continue;
    bool last = i + 1 == ls.size();
    if (!last && ls[i + 1].is_x()) {
      std::vector<Letter> sw(ls.begin(), ls.end());
      std::swap(sw[i], sw[i + 1]);
      out.push_back({ShuffleWord(p, std::move(sw)), MoveKind::Transposition,
                     CVertex::edge(ls[i + 1].index, ls[i].index)});
    } else {
      out.push_back({ShuffleWord(p, with_erased(ls, i)), MoveKind::RightIndel,
                     CVertex::loop_y(ls[i].index)});
    }
  }
  for (int s = 1; s <= p.m; ++s) {
    if (w.contains(Letter::x(s))) continue;
    std::size_t slot = right_slot(ls, LetterKind::X, s);
    out.push_back({ShuffleWord(p, with_inserted(ls, slot, Letter::x(s))), MoveKind::RightIndel,
                   CVertex::loop_x(s)});
  }
  return out;
}

std::vector<ShuffleWord> shuf_upper_covers(const ShuffleWord& w) {
  const Params p = w.params();
  auto ls = w.letters();
  std::vector<ShuffleWord> out;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].is_x()) out.emplace_back(p, with_erased(ls, i));
  for (int t = 1; t <= p.n; ++t) {
    if (w.contains(Letter::y(t))) continue;
    // any slot strictly after the last smaller y and up to the first larger y
    std::size_t lo = 0;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (ls[i].is_y() && ls[i].index < t) lo = i + 1;
    std::size_t hi = right_slot(ls, LetterKind::Y, t);
    for (std::size_t slot = lo; slot <= hi; ++slot)
      out.emplace_back(p, with_inserted(ls, slot, Letter::y(t)));
  }
  return out;
}

InterfaceResidue interface_residue(const ShuffleWord& w) {
  auto ls = w.letters();
  std::vector<bool> in_interface(ls.size(), false);
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
    if (ls[i].is_y() && ls[i + 1].is_x()) in_interface[i] = in_interface[i + 1] = true;
  }
  InterfaceResidue out;
  for (std::size_t i = 0; i < ls.size(); ++i)
    (in_interface[i] ? out.interface : out.residue).push_back(ls[i]);
  std::sort(out.interface.begin(), out.interface.end());
  std::sort(out.residue.begin(), out.residue.end());
  return out;
}

InDegrees in_degrees(const ShuffleWord& w) {
  InDegrees d;
  for (const Cover& c : bub_lower_covers(w)) {
    if (c.kind == MoveKind::Transposition)
      ++d.transpose;
    else
      ++d.indel;
  }
  return d;
}

CVertex cover_label(const ShuffleWord& u, const ShuffleWord& v) {
  for (const Cover& c : bub_upper_covers(u))
    if (c.word == v) return c.label;
  throw InvalidArgument("not a cover: " + to_string(u) + " -> " + to_string(v));
}

Face downward_labels(const ShuffleWord& w) {
  std::vector<CVertex> labels;
  for (const Cover& c : bub_lower_covers(w)) labels.push_back(c.label);
  return make_face(std::move(labels));
}

ShuffleWord word_from_labels(const Face& sigma, Params p) {
  if (!is_gamma_face(sigma, p)) throw InvalidArgument("not a Gamma-face: " + to_string(sigma));
  std::vector<bool> looped_x(p.m + 1, false);
  std::vector<int> y_before_x(p.m + 1, 0);
  std::vector<int> loop_ys;
  for (const CVertex& v : sigma) {
    if (v.kind == CVertex::Kind::LoopX) looped_x[v.a] = true;
    if (v.kind == CVertex::Kind::LoopY) loop_ys.push_back(v.a);
    if (v.is_edge()) y_before_x[v.a] = v.b;
  }
  std::vector<Letter> word;
  for (int s = 1; s <= p.m; ++s) {
    if (looped_x[s]) continue;
    if (y_before_x[s]) word.push_back(Letter::y(y_before_x[s]));
    word.push_back(Letter::x(s));
  }
  std::sort(loop_ys.begin(), loop_ys.end());
  for (int t : loop_ys) {
    std::size_t slot = right_slot(word, LetterKind::Y, t);
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(slot), Letter::y(t));
  }
  return ShuffleWord(p, std::move(word));
}

ShuffleWord dualize(const ShuffleWord& w) {
  std::vector<Letter> swapped;
  swapped.reserve(w.size());
  for (const Letter& l : w.letters())
    swapped.push_back(l.is_x() ? Letter::y(l.index) : Letter::x(l.index));
  return ShuffleWord(Params{w.params().n, w.params().m}, std::move(swapped));
}

int shuf_rank(const ShuffleWord& w) {
  return w.params().m - std::popcount(w.x_mask()) + std::popcount(w.y_mask());
}

}  // namespace bubble
