#pragma once

// Identity and conjecture verifier. Both sides of every identity are
// evaluated with exact rationals on an integer grid whose side exceeds the
// per-variable degree of the denominator-cleared difference, so agreement on
// the grid decides polynomial (or rational-function) equality.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bubble/complex.hpp"
#include "bubble/poly.hpp"
#include "bubble/poset.hpp"
#include "bubble/triangles.hpp"

namespace bubble {

struct Witness {
  std::vector<std::pair<std::string, Rat>> point;  // empty for scalar identities
  Rat lhs, rhs;
};

struct IdentityReport {
  std::string name;
  Params params;
  bool pass = false;
  std::optional<Witness> witness;  // present iff !pass
  std::size_t points = 0;          // grid points evaluated
};

/// Every identity name, in the order `verify --identity all` runs them.
const std::vector<std::string>& identity_names();
bool is_identity_name(std::string_view name);
/// Largest m+n an identity accepts under enforced caps (the smallest cap
/// among the objects it builds). Throws InvalidArgument for unknown names.
int identity_cap(std::string_view name);

/// Lazily built and cached objects for one (m,n) cell.
class Workbench {
 public:
  explicit Workbench(Params p, CapPolicy policy = CapPolicy::enforce) : p_(p), policy_(policy) {}

  Params params() const { return p_; }
  CapPolicy policy() const { return policy_; }

  const std::vector<ShuffleWord>& words();
  const WordPoset& shuffle();
  const Complex& gamma();
  const Complex& delta();

  const MultiPoly& h();        // definitional H-triangle
  const MultiPoly& f();        // definitional F-triangle
  const MultiPoly& m();        // M-triangle by Möbius inversion
  const MultiPoly& m_swapped();  // M-triangle of Shuf(n,m)
  const MultiPoly& ch();       // reverse characteristic polynomial
  const MultiPoly& h_ext();
  const MultiPoly& f_ext();

 private:
  Params p_;
  CapPolicy policy_;
  std::optional<std::vector<ShuffleWord>> words_;
  std::optional<WordPoset> shuffle_;
  std::optional<Complex> gamma_, delta_;
  std::optional<MultiPoly> h_, f_, m_, m_swapped_, ch_, h_ext_, f_ext_;
};

/// Throws InvalidArgument for unknown names; CapExceeded from the builders.
IdentityReport verify_identity(std::string_view name, Workbench& wb);
IdentityReport verify_identity(std::string_view name, Params p, CapPolicy policy = CapPolicy::enforce);

/// "fh 2 1 PASS" or "fh 2 1 FAIL at q=2 t=3: lhs=... rhs=...".
std::string format_report(const IdentityReport& r);
std::string to_json(const std::vector<IdentityReport>& reports);

}  // namespace bubble
