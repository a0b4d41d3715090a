#pragma once

// q-Delannoy paths, their peaks and colored diagonals, and the bijections
// with faces and flags of the loop-free matching complex.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bubble/error.hpp"
#include "bubble/numeric.hpp"
#include "bubble/vertex.hpp"

namespace bubble {

inline constexpr int kPathSizeCap = 14;   // m + n
inline constexpr int kPathColorCap = 6;   // q

struct Step {
  enum class Kind : std::uint8_t { E, N, D };
  Kind kind = Kind::E;
  int color = 0;  // 1..q for diagonal steps

  friend bool operator==(const Step&, const Step&) = default;
};

struct DelannoyPath {
  int m = 0, n = 0, q = 0;
  std::vector<Step> steps;

  friend bool operator==(const DelannoyPath&, const DelannoyPath&) = default;
};

/// Lexicographic in the step order E < N < D1 < ... < Dq.
std::vector<DelannoyPath> enumerate_delannoy(int m, int n, int q, CapPolicy policy = CapPolicy::enforce);

/// sum_a C(m,a) C(n,a) (q+1)^a.
BigInt count_closed(int m, int n, int q);

/// "E D2 N"; "-" for the empty path.
std::string to_string(const DelannoyPath& p);
/// Throws InvalidArgument unless the steps end at (m,n) with colors in 1..q.
DelannoyPath parse_path(std::string_view text, int m, int n, int q);

/// Lattice points preceded by N and followed by E.
std::vector<std::pair<int, int>> peaks(const DelannoyPath& p);

struct Diagonal {
  int s = 0, t = 0;  // the step runs from (s-1, t-1) to (s, t)
  int color = 0;
};
std::vector<Diagonal> diagonals(const DelannoyPath& p);

/// Peak (i, j) becomes the edge {x_{i+1}, y_j}. Requires q = 0.
Face face_from_path(const DelannoyPath& p);
/// Inverse of face_from_path; throws for loops or crossing edges.
DelannoyPath path_from_face(const Face& f, int m, int n);

/// G_0 subset G_1 subset ... subset G_q.
using Flag = std::vector<Face>;

/// Peaks give G_0; a diagonal of color k into (s, t) puts {x_s, y_t} in G_k \ G_{k-1}.
Flag flag_from_path(const DelannoyPath& p);
/// Inverse of flag_from_path with q = flag.size() - 1. Throws InvalidArgument
/// for a non-chain, a face outside the loop-free complex, or crossing marks.
DelannoyPath path_from_flag(const Flag& flag, int m, int n);

enum class SchroderKind { Schroder, Little };

/// Every peak (i, j) has i >= j and every diagonal has s >= t; the little
/// variant also forbids diagonals with s = t. Throws unless m = n.
bool is_schroder(const DelannoyPath& p, SchroderKind kind);
std::vector<DelannoyPath> schroder_filter(const std::vector<DelannoyPath>& paths, SchroderKind kind);

/// (1/n) C(n,k) C(n,k+1), the number of left-leaning faces with k edges.
BigInt narayana(int n, int k);

}  // namespace bubble
