#pragma once

// H-, F-, M-triangles, the reverse characteristic polynomial, the extended
// triangles and the Björner-Wachs triangles, each from its definition and,
// where one exists, from its closed formula.

#include <string>
#include <vector>

#include "bubble/complex.hpp"
#include "bubble/poly.hpp"
#include "bubble/poset.hpp"

namespace bubble {

enum class TriangleMode { Definitional, Closed };

inline constexpr int kExtendedCap = 8;
inline constexpr int kMobiusCap = 10;

/// sum over words of q^in(w) t^in_indel(w).
MultiPoly h_triangle_def(const std::vector<ShuffleWord>& words);
/// sum_a C(m,a) C(n,a) q^a (qt+1)^(m+n-2a).
MultiPoly h_triangle_closed(Params p);

/// sum over faces of Delta of q^#edges t^#loops.
MultiPoly f_triangle_def(const Complex& delta);
/// sum_a C(m,a) C(n,a) q^a (q+1)^a (q+t+1)^(m+n-2a).
MultiPoly f_triangle_closed(Params p);

/// Variable attached to a letter in the extended triangles: "t_x1", "t_y2".
std::string t_var(Letter l);
/// q followed by t_x1..t_xm, t_y1..t_yn.
std::vector<std::string> extended_vars(Params p);
MultiPoly extended_f_def(const Complex& delta);
MultiPoly extended_h_def(const std::vector<ShuffleWord>& words, Params p);
/// Sets every t_z to t.
MultiPoly collapse_extended(const MultiPoly& ext, Params p);

/// sum over u <= v in Shuf of mu(u,v) q^rk(u) t^rk(v).
MultiPoly m_triangle_def(const WordPoset& shuf);
/// sum_a C(m,a) C(n,a) t^a (1-t)^a (q-1)^a (qt-t+1)^(m+n-2a).
MultiPoly m_triangle_closed(Params p);

/// sum over v of mu(bottom, v) q^rk(v), in the variable q.
MultiPoly char_poly_def(const WordPoset& shuf);
/// sum_a C(m,a) C(n,a) (-q)^a (1-q)^(m+n-a).
MultiPoly char_poly_closed(Params p);

/// sum f_{i,j} q^i t^(i-j) and sum h_{i,j} q^i t^(i-j) from bw_tables.
MultiPoly bw_f_triangle(const Complex& c);
MultiPoly bw_h_triangle(const Complex& c);
/// q^(m+n) H(1/q, qt) and q^(m+n) H(1/q, q(t-1)), expanded term by term.
MultiPoly bw_f_gamma_closed(const MultiPoly& h, Params p);
MultiPoly bw_h_gamma_closed(const MultiPoly& h, Params p);

/// sum f_{i-1} q^i and sum h_i q^i.
MultiPoly f_polynomial(const Complex& c);
MultiPoly h_polynomial(const Complex& c);

/// Convenience wrappers building the underlying objects.
MultiPoly h_triangle(Params p, TriangleMode mode, CapPolicy policy = CapPolicy::enforce);
MultiPoly f_triangle(Params p, TriangleMode mode, CapPolicy policy = CapPolicy::enforce);
MultiPoly m_triangle(Params p, TriangleMode mode, CapPolicy policy = CapPolicy::enforce);
MultiPoly char_poly(Params p, TriangleMode mode, CapPolicy policy = CapPolicy::enforce);
MultiPoly extended_f(Params p, CapPolicy policy = CapPolicy::enforce);
MultiPoly extended_h(Params p, CapPolicy policy = CapPolicy::enforce);

}  // namespace bubble
