#include "bubble/poly.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <numeric>

#include "bubble/error.hpp"

namespace bubble {

bool GrlexDesc::operator()(const Exps& a, const Exps& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const BigInt& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  p.add_term(Exps(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term({1}, 1);
  return p;
}

void MultiPoly::add_term(const Exps& exps, const BigInt& c) {
  if (exps.size() != vars_.size()) throw InvalidArgument("exponent vector has the wrong arity");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exps, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coeff(const Exps& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::coeff(const std::map<std::string, int>& exps) const {
  Exps e(vars_.size(), 0);
  for (const auto& [name, k] : exps) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (k != 0) return 0;
      continue;
    }
    e[it - vars_.begin()] = k;
  }
  return coeff(e);
}

MultiPoly MultiPoly::aligned(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
  }
  MultiPoly out(vars);
  for (const auto& [e, c] : terms_) {
    Exps ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0) throw InvalidArgument("arity mismatch: variable " + vars_[i] + " has no slot");
      ne[where[i]] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

int MultiPoly::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  std::size_t i = it - vars_.begin();
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

Rat MultiPoly::eval(const std::map<std::string, Rat>& point) const {
  std::vector<std::vector<Rat>> powers(vars_.size());
  std::vector<const Rat*> value(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it != point.end()) value[i] = &it->second;
  }
  Rat sum = 0;
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!value[i]) throw InvalidArgument("no value for variable " + vars_[i]);
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.empty() ? Rat(1) : pw.back() * *value[i]);
      term *= pw[e[i]];
    }
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const std::size_t k = it - vars_.begin();
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<MultiPoly> powers{MultiPoly::constant(1)};
  MultiPoly out(merge_vars(rest, value.vars()));
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[k]) powers.push_back(powers.back() * value);
    MultiPoly mono(rest);
    Exps re = e;
    re.erase(re.begin() + static_cast<std::ptrdiff_t>(k));
    mono.add_term(re, c);
    out += mono * powers[e[k]];
  }
  return out;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  auto vars = merge_vars(a.vars_, b.vars_);
  MultiPoly out = a.aligned(vars);
  for (const auto& [e, c] : b.aligned(vars).terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  auto vars = merge_vars(a.vars_, b.vars_);
  MultiPoly x = a.aligned(vars), y = b.aligned(vars);
  MultiPoly out(vars);
  Exps e(vars.size());
  for (const auto& [ea, ca] : x.terms_) {
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  auto vars = merge_vars(a.vars_, b.vars_);
  return a.aligned(vars).terms_ == b.aligned(vars).terms_;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
  MultiPoly result = MultiPoly::constant(1, p.vars());
  MultiPoly base = p;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::vector<std::string> vars, bool fixed)
      : s_(s), vars_(std::move(vars)), fixed_(fixed) {}

  MultiPoly parse() {
    std::vector<std::pair<Exps, BigInt>> raw;
    skip();
    int sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = get() == '-' ? -1 : 1;
    }
    while (true) {
      auto [e, c] = term();
      raw.emplace_back(std::move(e), sign * c);
      skip();
      if (pos_ == s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected + or -");
      sign = op == '-' ? -1 : 1;
    }
    MultiPoly out(vars_);
    for (auto& [e, c] : raw) {
      e.resize(vars_.size(), 0);
      out.add_term(e, c);
    }
    return out;
  }

 private:
  std::pair<Exps, BigInt> term() {
    Exps e;
    BigInt c = 1;
    bool any = false;
    do {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= integer();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        std::size_t v = variable();
        int k = 1;
        skip();
        if (peek() == '^') {
          get();
          skip();
          k = static_cast<int>(integer().get_si());
        }
        if (e.size() <= v) e.resize(v + 1, 0);
        e[v] += k;
      } else {
        fail("expected a number or a variable");
      }
      any = true;
      skip();
    } while (peek() == '*' && get());
    if (!any) fail("empty term");
    return {e, c};
  }

  BigInt integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  std::size_t variable() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it != vars_.end()) return it - vars_.begin();
    if (fixed_) fail("unknown variable " + name);
    vars_.push_back(name);
    return vars_.size() - 1;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  bool fixed_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::vector<std::string> vars) {
  bool fixed = !vars.empty();
  return Parser(text, std::move(vars), fixed).parse();
}

std::string to_json(const MultiPoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars();
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coef", c.get_str()}, {"exps", e}});
  return j.dump();
}

MultiPoly poly_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    MultiPoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("exps").get<Exps>(), BigInt(t.at("coef").get<std::string>()));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad polynomial JSON: ") + e.what());
  }
}

}  // namespace bubble
