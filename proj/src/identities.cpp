#include "bubble/identities.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>

namespace bubble {

// ---- workbench ---------------------------------------------------------------

const std::vector<ShuffleWord>& Workbench::words() {
  if (!words_) words_ = enumerate_words(p_, policy_);
  return *words_;
}

const WordPoset& Workbench::shuffle() {
  if (!shuffle_) {
    require_within_cap("m+n", p_.r(), kMobiusCap, policy_);
    shuffle_ = shuffle_poset(p_, policy_);
  }
  return *shuffle_;
}

const Complex& Workbench::gamma() {
  if (!gamma_) gamma_ = build_complex(ComplexKind::Gamma, p_, policy_);
  return *gamma_;
}

const Complex& Workbench::delta() {
  if (!delta_) delta_ = build_complex(ComplexKind::Delta, p_, policy_);
  return *delta_;
}

const MultiPoly& Workbench::h() {
  if (!h_) h_ = h_triangle_def(words());
  return *h_;
}

const MultiPoly& Workbench::f() {
  if (!f_) f_ = f_triangle_def(delta());
  return *f_;
}

const MultiPoly& Workbench::m() {
  if (!m_) m_ = m_triangle_def(shuffle());
  return *m_;
}

const MultiPoly& Workbench::m_swapped() {
  if (!m_swapped_) {
    if (p_.m == p_.n) {
      m_swapped_ = m();
    } else {
      require_within_cap("m+n", p_.r(), kMobiusCap, policy_);
      m_swapped_ = m_triangle_def(shuffle_poset({p_.n, p_.m}, policy_));
    }
  }
  return *m_swapped_;
}

const MultiPoly& Workbench::ch() {
  if (!ch_) ch_ = char_poly_def(shuffle());
  return *ch_;
}

const MultiPoly& Workbench::h_ext() {
  if (!h_ext_) {
    require_within_cap("m+n", p_.r(), kExtendedCap, policy_);
    h_ext_ = extended_h_def(words(), p_);
  }
  return *h_ext_;
}

const MultiPoly& Workbench::f_ext() {
  if (!f_ext_) {
    require_within_cap("m+n", p_.r(), kExtendedCap, policy_);
    f_ext_ = extended_f_def(delta());
  }
  return *f_ext_;
}

// ---- grid evaluation ---------------------------------------------------------

namespace {

using Point = std::vector<Rat>;
// nullopt marks a point where some denominator vanishes.
using Side = std::function<std::optional<Rat>(const Point&)>;

Rat rpow(const Rat& x, int k) {
  Rat out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

std::vector<Rat> default_axis(Params p) {
  std::vector<Rat> axis;
  for (int v = 2; v <= 3 * p.r() + 5; ++v) axis.emplace_back(v);
  return axis;
}

IdentityReport grid_check(std::string name, Params p, const std::vector<std::string>& vars,
                          const std::vector<std::vector<Rat>>& axes, const Side& lhs, const Side& rhs) {
  IdentityReport rep{std::move(name), p, true, std::nullopt, 0};
  std::vector<std::size_t> idx(vars.size(), 0);
  Point pt(vars.size());
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) pt[i] = axes[i][idx[i]];
    auto l = lhs(pt);
    auto r = l ? rhs(pt) : std::nullopt;
    if (l && r) {
      ++rep.points;
      if (*l != *r) {
        Witness w;
        for (std::size_t i = 0; i < vars.size(); ++i) w.point.emplace_back(vars[i], pt[i]);
        w.lhs = *l;
        w.rhs = *r;
        rep.pass = false;
        rep.witness = std::move(w);
        return rep;
      }
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == axes[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return rep;
}

IdentityReport grid_qt(std::string name, Params p, const Side& lhs, const Side& rhs) {
  auto axis = default_axis(p);
  return grid_check(std::move(name), p, {"q", "t"}, {axis, axis}, lhs, rhs);
}

IdentityReport grid_q(std::string name, Params p, const Side& lhs, const Side& rhs) {
  return grid_check(std::move(name), p, {"q"}, {default_axis(p)}, lhs, rhs);
}

IdentityReport scalar_check(std::string name, Params p, const Rat& lhs, const Rat& rhs) {
  IdentityReport rep{std::move(name), p, lhs == rhs, std::nullopt, 1};
  if (!rep.pass) rep.witness = Witness{{}, lhs, rhs};
  return rep;
}

Rat ev(const MultiPoly& poly, const Rat& q, const Rat& t) { return poly.eval({{"q", q}, {"t", t}}); }
Rat ev(const MultiPoly& poly, const Rat& q) { return poly.eval({{"q", q}}); }

Side qt_side(const MultiPoly& poly) {
  return [&poly](const Point& x) -> std::optional<Rat> { return ev(poly, x[0], x[1]); };
}
Side q_side(const MultiPoly& poly) {
  return [&poly](const Point& x) -> std::optional<Rat> { return ev(poly, x[0]); };
}

using Check = std::function<IdentityReport(Workbench&)>;

IdentityReport fh(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& h = wb.h();
  return grid_qt("fh", p, qt_side(wb.f()), [&](const Point& x) -> std::optional<Rat> {
    const Rat &q = x[0], &t = x[1];
    if (q == 0 || q + 1 == 0) return std::nullopt;
    return rpow(q, p.r()) * ev(h, (q + 1) / q, (t + 1) / (q + 1));
  });
}

IdentityReport fh_inverse(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& f = wb.f();
  return grid_qt("fh_inverse", p, qt_side(wb.h()), [&](const Point& x) -> std::optional<Rat> {
    const Rat &q = x[0], &t = x[1];
    if (q == 1) return std::nullopt;
    return rpow(q - 1, p.r()) * ev(f, 1 / (q - 1), (1 + q * (t - 1)) / (q - 1));
  });
}

IdentityReport extended_fh(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& he = wb.h_ext();
  const MultiPoly& fe = wb.f_ext();
  const auto vars = extended_vars(p);
  std::vector<std::vector<Rat>> axes{default_axis(p)};
  for (int i = 0; i < p.r(); ++i) axes.push_back({Rat(2), Rat(3), Rat(4)});
  auto bind = [&](const Point& x) {
    std::map<std::string, Rat> pt;
    for (std::size_t i = 0; i < vars.size(); ++i) pt.emplace(vars[i], x[i]);
    return pt;
  };
  return grid_check(
      "extended_fh", p, vars, axes, [&](const Point& x) -> std::optional<Rat> { return he.eval(bind(x)); },
      [&](const Point& x) -> std::optional<Rat> {
        const Rat& q = x[0];
        if (q == 1) return std::nullopt;
        Point y(x.size());
        y[0] = 1 / (q - 1);
        for (std::size_t i = 1; i < x.size(); ++i) y[i] = (1 + q * (x[i] - 1)) / (q - 1);
        return rpow(q - 1, p.r()) * fe.eval(bind(y));
      });
}

IdentityReport hm_conjecture(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& h = wb.h();
  return grid_qt("hm_conjecture", p, qt_side(wb.m()), [&](const Point& x) -> std::optional<Rat> {
    const Rat &q = x[0], &t = x[1];
    if (q == 1 || t == 1) return std::nullopt;
    return rpow(1 - t, p.r()) * ev(h, t * (q - 1) / (1 - t), q / (q - 1));
  });
}

IdentityReport m_closed_conjecture(Workbench& wb) {
  const MultiPoly closed = m_triangle_closed(wb.params());
  return grid_qt("m_closed_conjecture", wb.params(), qt_side(wb.m()), qt_side(closed));
}

IdentityReport char_from_h(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& h = wb.h();
  return grid_q("char_from_h", p, q_side(wb.ch()), [&](const Point& x) -> std::optional<Rat> {
    const Rat& q = x[0];
    if (q == 0 || q == 1) return std::nullopt;
    return rpow(q, p.r()) * ev(h, (q - 1) / q, (1 - 2 * q) / (q - 1));
  });
}

IdentityReport f_symmetry(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& f = wb.f();
  const Rat sign = p.r() % 2 ? -1 : 1;
  return grid_qt("f_symmetry", p, qt_side(f), [&](const Point& x) -> std::optional<Rat> {
    return sign * ev(f, -1 - x[0], -1 - x[1]);
  });
}

IdentityReport dehn_sommerville(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly hd = h_polynomial(wb.delta());
  return grid_q("dehn_sommerville", p, q_side(hd), [&](const Point& x) -> std::optional<Rat> {
    return rpow(x[0], p.r()) * ev(hd, 1 / x[0]);
  });
}

IdentityReport fh_relation(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly fd = f_polynomial(wb.delta()), hd = h_polynomial(wb.delta());
  const int d = wb.delta().dim() + 1;
  return grid_q("fh_relation", p, q_side(fd), [&](const Point& x) -> std::optional<Rat> {
    const Rat& q = x[0];
    return rpow(q + 1, d) * ev(hd, q / (q + 1));
  });
}

IdentityReport h_is_f(Workbench& wb) {
  const MultiPoly hd = h_polynomial(wb.delta()), fg = f_polynomial(wb.gamma());
  return grid_q("h_is_f", wb.params(), q_side(hd), q_side(fg));
}

IdentityReport m_self_dual(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly& other = wb.m_swapped();
  return grid_qt("m_self_dual", p, qt_side(wb.m()), [&](const Point& x) -> std::optional<Rat> {
    const Rat &q = x[0], &t = x[1];
    return rpow(q * t, p.r()) * ev(other, 1 / t, 1 / q);
  });
}

IdentityReport euler_gamma(Workbench& wb) {
  const Params p = wb.params();
  const Rat claimed = p.m == p.n ? Rat(p.n % 2 ? -1 : 1) : Rat(0);
  return scalar_check("euler_gamma", p, Rat(euler(wb.gamma())), claimed);
}

IdentityReport euler_delta(Workbench& wb) {
  const Params p = wb.params();
  return scalar_check("euler_delta", p, Rat(euler(wb.delta())), Rat((p.r() - 1) % 2 ? -1 : 1));
}

IdentityReport h_closed(Workbench& wb) {
  const MultiPoly closed = h_triangle_closed(wb.params());
  return grid_qt("h_closed", wb.params(), qt_side(wb.h()), qt_side(closed));
}

IdentityReport f_closed(Workbench& wb) {
  const MultiPoly closed = f_triangle_closed(wb.params());
  return grid_qt("f_closed", wb.params(), qt_side(wb.f()), qt_side(closed));
}

IdentityReport char_closed(Workbench& wb) {
  const MultiPoly closed = char_poly_closed(wb.params());
  return grid_q("char_closed", wb.params(), q_side(wb.ch()), q_side(closed));
}

IdentityReport bw_f_gamma(Workbench& wb) {
  const MultiPoly table = bw_f_triangle(wb.gamma()), closed = bw_f_gamma_closed(wb.h(), wb.params());
  return grid_qt("bw_f_gamma", wb.params(), qt_side(table), qt_side(closed));
}

IdentityReport bw_h_gamma(Workbench& wb) {
  const MultiPoly table = bw_h_triangle(wb.gamma()), closed = bw_h_gamma_closed(wb.h(), wb.params());
  return grid_qt("bw_h_gamma", wb.params(), qt_side(table), qt_side(closed));
}

// H^BW(q,0) is q^n on the diagonal and 0 elsewhere.
IdentityReport bw_h_diagonal(Workbench& wb) {
  const Params p = wb.params();
  const MultiPoly table = bw_h_triangle(wb.gamma());
  return grid_q(
      "bw_h_diagonal", p, [&](const Point& x) -> std::optional<Rat> { return ev(table, x[0], Rat(0)); },
      [&](const Point& x) -> std::optional<Rat> { return p.m == p.n ? rpow(x[0], p.n) : Rat(0); });
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> table{
      {"fh", fh},
      {"fh_inverse", fh_inverse},
      {"extended_fh", extended_fh},
      {"hm_conjecture", hm_conjecture},
      {"m_closed_conjecture", m_closed_conjecture},
      {"char_from_h", char_from_h},
      {"f_symmetry", f_symmetry},
      {"dehn_sommerville", dehn_sommerville},
      {"fh_relation", fh_relation},
      {"h_is_f", h_is_f},
      {"m_self_dual", m_self_dual},
      {"euler_gamma", euler_gamma},
      {"euler_delta", euler_delta},
      {"h_closed", h_closed},
      {"f_closed", f_closed},
      {"char_closed", char_closed},
      {"bw_f_gamma", bw_f_gamma},
      {"bw_h_gamma", bw_h_gamma},
      {"bw_h_diagonal", bw_h_diagonal},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, check] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_identity_name(std::string_view name) {
  const auto& names = identity_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int identity_cap(std::string_view name) {
  if (!is_identity_name(name)) throw InvalidArgument("unknown identity: " + std::string(name));
  if (name == "extended_fh") return kExtendedCap;
  for (std::string_view s : {"hm_conjecture", "m_closed_conjecture", "char_from_h", "m_self_dual", "char_closed"})
    if (name == s) return kMobiusCap;
  for (std::string_view s : {"euler_gamma", "bw_f_gamma", "bw_h_gamma", "bw_h_diagonal"})
    if (name == s) return kGammaCap;
  if (name == "h_closed") return kWordCap;
  return kDeltaCap;
}

IdentityReport verify_identity(std::string_view name, Workbench& wb) {
  for (const auto& [n, check] : registry())
    if (n == name) return check(wb);
  throw InvalidArgument("unknown identity: " + std::string(name));
}

IdentityReport verify_identity(std::string_view name, Params p, CapPolicy policy) {
  Workbench wb(p, policy);
  return verify_identity(name, wb);
}

std::string format_report(const IdentityReport& r) {
  std::string out = r.name + " " + std::to_string(r.params.m) + " " + std::to_string(r.params.n);
  if (r.pass) return out + " PASS";
  out += " FAIL";
  if (r.witness) {
    if (!r.witness->point.empty()) {
      out += " at";
      for (const auto& [var, val] : r.witness->point) out += " " + var + "=" + val.get_str();
    }
    out += ": lhs=" + r.witness->lhs.get_str() + " rhs=" + r.witness->rhs.get_str();
  }
  return out;
}

std::string to_json(const std::vector<IdentityReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["identity"] = r.name;
    j["m"] = r.params.m;
    j["n"] = r.params.n;
    j["status"] = r.pass ? "PASS" : "FAIL";
    j["points"] = r.points;
    if (r.witness) {
      nlohmann::ordered_json pt = nlohmann::ordered_json::object();
      for (const auto& [var, val] : r.witness->point) pt[var] = val.get_str();
      j["witness"] = {{"point", pt}, {"lhs", r.witness->lhs.get_str()}, {"rhs", r.witness->rhs.get_str()}};
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace bubble
