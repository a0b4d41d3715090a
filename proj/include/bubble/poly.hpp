#pragma once

// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients over named variables.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/error.hpp"
#include "bubble/numeric.hpp"

namespace bubble {

using Exps = std::vector<int>;

/// Graded lexicographic order, largest first: total degree, then exponents
/// compared variable by variable in declaration order.
struct GrlexDesc {
  bool operator()(const Exps& a, const Exps& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exps, BigInt, GrlexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);

  static MultiPoly constant(const BigInt& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Adds c * monomial; exps must match the variable count.
  void add_term(const Exps& exps, const BigInt& c);
  BigInt coeff(const Exps& exps) const;
  /// Coefficient looked up by variable name; missing names count as exponent 0.
  BigInt coeff(const std::map<std::string, int>& exps) const;

  /// Same polynomial over `vars`, which must contain every variable that
  /// occurs with a nonzero exponent.
  MultiPoly aligned(const std::vector<std::string>& vars) const;

  int degree_in(const std::string& var) const;
  int total_degree() const;

  Rat eval(const std::map<std::string, Rat>& point) const;
  /// Replaces `var` by `value`; the result lives over the union of variables.
  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// Union of the variable lists, first list's order then new names.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// "3*q^2*t + 5*q - 1"; the zero polynomial is "0".
std::string to_string(const MultiPoly& p);
/// Accepts the output of to_string (integer coefficients, ^ powers, * products).
/// Variables appear in order of first occurrence unless `vars` is given.
MultiPoly parse_poly(std::string_view text, std::vector<std::string> vars = {});

std::string to_json(const MultiPoly& p);
MultiPoly poly_from_json(std::string_view text);

}  // namespace bubble
