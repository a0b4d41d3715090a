#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <sstream>
#include <thread>

#include "bubble/complex.hpp"
#include "bubble/identities.hpp"
#include "bubble/paths.hpp"
#include "bubble/poset.hpp"
#include "bubble/triangles.hpp"
#include "bubble/word.hpp"

namespace bubble::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set when a check inside a command failed; the command still prints everything.
struct Outcome {
  bool failed = false;
};

std::string letters_text(const std::vector<Letter>& ls) {
  if (ls.empty()) return "-";
  std::string out;
  for (const Letter& l : ls) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

std::vector<std::string> letters_json(const std::vector<Letter>& ls) {
  std::vector<std::string> out;
  for (const Letter& l : ls) out.push_back(to_string(l));
  return out;
}

void enumerate_cmd(Params p, bool json, CapPolicy policy, std::ostream& out) {
  const auto words = enumerate_words(p, policy);
  if (json) {
    nlohmann::ordered_json j;
    j["m"] = p.m;
    j["n"] = p.n;
    auto& arr = j["words"] = nlohmann::ordered_json::array();
    for (const auto& w : words) {
      const InDegrees d = in_degrees(w);
      const InterfaceResidue ir = interface_residue(w);
      arr.push_back({{"word", to_string(w)},
                     {"rank", shuf_rank(w)},
                     {"in", d.total()},
                     {"in_transpose", d.transpose},
                     {"in_indel", d.indel},
                     {"interface", letters_json(ir.interface)},
                     {"residue", letters_json(ir.residue)}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "# word\trank\tin\tin_transpose\tin_indel\tinterface\tresidue\n";
  for (const auto& w : words) {
    const InDegrees d = in_degrees(w);
    const InterfaceResidue ir = interface_residue(w);
    out << to_string(w) << '\t' << shuf_rank(w) << '\t' << d.total() << '\t' << d.transpose << '\t' << d.indel
        << '\t' << letters_text(ir.interface) << '\t' << letters_text(ir.residue) << '\n';
  }
}

ComplexKind complex_kind(const std::string& which) {
  static const std::map<std::string, ComplexKind> kinds{{"gamma", ComplexKind::Gamma},
                                                        {"gamma+", ComplexKind::GammaPlus},
                                                        {"delta", ComplexKind::Delta},
                                                        {"delta+", ComplexKind::DeltaPlus},
                                                        {"left", ComplexKind::LeftLeaning}};
  return kinds.at(which);
}

MultiPoly triangle_poly(const std::string& which, Params p, TriangleMode mode, CapPolicy policy) {
  const bool closed = mode == TriangleMode::Closed;
  if (which == "h") return h_triangle(p, mode, policy);
  if (which == "f") return f_triangle(p, mode, policy);
  if (which == "m") return m_triangle(p, mode, policy);
  if (which == "char") return char_poly(p, mode, policy);
  if (which == "bw-f") {
    return closed ? bw_f_gamma_closed(h_triangle_closed(p), p)
                  : bw_f_triangle(build_complex(ComplexKind::Gamma, p, policy));
  }
  if (which == "bw-h") {
    return closed ? bw_h_gamma_closed(h_triangle_closed(p), p)
                  : bw_h_triangle(build_complex(ComplexKind::Gamma, p, policy));
  }
  if (closed) throw UsageError("--which " + which + " has no closed form");
  if (which == "ext-h") return extended_h(p, policy);
  return extended_f(p, policy);
}

void triangle_cmd(const std::string& which, Params p, bool closed, bool both, CapPolicy policy, std::ostream& out,
                  Outcome& outcome) {
  if (both) {
    if (which == "ext-h" || which == "ext-f") throw UsageError("--which " + which + " has no closed form");
    const MultiPoly d = triangle_poly(which, p, TriangleMode::Definitional, policy);
    const MultiPoly c = triangle_poly(which, p, TriangleMode::Closed, policy);
    if (d == c) {
      out << to_string(d) << '\n';
    } else {
      out << "definitional: " << to_string(d) << '\n' << "closed: " << to_string(c) << '\n' << "FAIL\n";
      outcome.failed = true;
    }
    return;
  }
  out << to_string(triangle_poly(which, p, closed ? TriangleMode::Closed : TriangleMode::Definitional, policy))
      << '\n';
}

std::vector<std::string> identity_list(const std::string& spec) {
  if (spec == "all") return identity_names();
  std::vector<std::string> names;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!is_identity_name(item)) throw UsageError("unknown identity: " + item);
    names.push_back(item);
  }
  if (names.empty()) throw UsageError("no identities given");
  return names;
}

void verify_cmd(const std::string& spec, Params p, bool json, CapPolicy policy, std::ostream& out,
                Outcome& outcome) {
  const auto names = identity_list(spec);
  Workbench wb(p, policy);
  std::vector<IdentityReport> reports;
  for (const auto& name : names) {
    reports.push_back(verify_identity(name, wb));
    if (!reports.back().pass) outcome.failed = true;
  }
  if (json) {
    out << to_json(reports) << '\n';
  } else {
    for (const auto& r : reports) out << format_report(r) << '\n';
  }
}

struct CellResult {
  std::vector<IdentityReport> reports;
  std::exception_ptr error;
};

void sweep_cmd(int max_r, const std::string& spec, int jobs, CapPolicy policy, std::ostream& out, Outcome& outcome) {
  const auto names = identity_list(spec);
  for (const auto& name : names) require_within_cap(name + " needs m+n", max_r, identity_cap(name), policy);
  std::vector<Params> cells;
  for (int m = 0; m <= max_r; ++m)
    for (int n = 0; m + n <= max_r; ++n) cells.push_back({m, n});

  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        Workbench wb(cells[i], policy);
        for (const auto& name : names) results[i].reports.push_back(verify_identity(name, wb));
      } catch (...) {
        results[i].error = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<std::string, std::pair<int, int>> tally;
  int pass = 0, fail = 0;
  for (const auto& cell : results) {
    if (cell.error) std::rethrow_exception(cell.error);
    for (const auto& r : cell.reports) {
      out << format_report(r) << '\n';
      auto& [p, f] = tally[r.name];
      (r.pass ? p : f) += 1;
      (r.pass ? pass : fail) += 1;
    }
  }
  out << "\nidentity               pass  fail\n";
  for (const auto& name : names) {
    out << std::left << std::setw(22) << name << std::right << std::setw(5) << tally[name].first << std::setw(6)
        << tally[name].second << '\n';
  }
  out << std::left << std::setw(22) << "total" << std::right << std::setw(5) << pass << std::setw(6) << fail << '\n';
  out << cells.size() << " cells, max m+n = " << max_r << '\n';
  if (fail > 0) outcome.failed = true;
}

void paths_cmd(int m, int n, int q, bool list, bool schroder, bool little, CapPolicy policy, std::ostream& out,
               Outcome& outcome) {
  if ((schroder || little) && m != n) throw UsageError("--schroder and --little need m = n");
  const auto all = enumerate_delannoy(m, n, q, policy);
  const BigInt closed = count_closed(m, n, q);
  out << "enumerated " << all.size() << '\n' << "closed " << closed.get_str() << '\n';
  if (BigInt(static_cast<unsigned long>(all.size())) != closed) {
    out << "FAIL\n";
    outcome.failed = true;
  }
  std::vector<DelannoyPath> shown = all;
  if (schroder || little) {
    shown = schroder_filter(all, little ? SchroderKind::Little : SchroderKind::Schroder);
    out << (little ? "little " : "schroder ") << shown.size() << '\n';
  }
  if (list)
    for (const auto& p : shown) out << to_string(p) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bubble and shuffle lattices, their complexes and triangle polynomials"};
  app.name("bubblecx");
  app.require_subcommand(1);
  app.fallthrough();
  bool force = false;
  app.add_flag("--force", force, "Run past resource caps");

  int m = 0, n = 0;
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Number of x letters")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--n", n, "Number of y letters")->required()->check(CLI::NonNegativeNumber);
  };

  bool json = false;
  auto* enumerate = app.add_subcommand("enumerate", "List shuffle words with rank, in-degrees and interface");
  add_mn(enumerate);
  enumerate->add_flag("--json", json, "JSON output");

  std::string which, out_format;
  bool labels = false;
  auto* poset = app.add_subcommand("poset", "Hasse diagram of Bub(m,n) or Shuf(m,n)");
  poset->add_option("--which", which)->required()->check(CLI::IsMember({"bub", "shuf"}));
  add_mn(poset);
  poset->add_option("--out", out_format)->required()->check(CLI::IsMember({"dot", "json"}));
  poset->add_flag("--labels", labels, "Label bubble covers");

  std::string cwhich, cout_format;
  auto* complex = app.add_subcommand("complex", "Facets or f-vector of a complex");
  complex->add_option("--which", cwhich)->required()->check(CLI::IsMember({"gamma", "gamma+", "delta", "delta+", "left"}));
  add_mn(complex);
  complex->add_option("--out", cout_format)->required()->check(CLI::IsMember({"json", "fvector"}));

  std::string twhich;
  bool closed = false, definitional = false, both = false;
  auto* triangle = app.add_subcommand("triangle", "Triangle polynomials");
  triangle->add_option("--which", twhich)
      ->required()
      ->check(CLI::IsMember({"h", "f", "m", "char", "bw-f", "bw-h", "ext-h", "ext-f"}));
  add_mn(triangle);
  auto* o_closed = triangle->add_flag("--closed", closed, "Closed formula");
  auto* o_def = triangle->add_flag("--definitional", definitional, "Definition (default)");
  auto* o_both = triangle->add_flag("--both", both, "Compute both and require equality");
  o_closed->excludes(o_def)->excludes(o_both);
  o_def->excludes(o_both);

  std::string identity;
  bool vjson = false;
  auto* verify = app.add_subcommand("verify", "Check identities at one (m,n)");
  verify->add_option("--identity", identity, "Identity name or 'all'")->required();
  add_mn(verify);
  verify->add_flag("--json", vjson, "JSON output");

  int max_r = 0, jobs = 1;
  std::string identities;
  auto* sweep = app.add_subcommand("sweep", "Check identities on every cell with m+n <= R");
  sweep->add_option("--max-r", max_r)->required()->check(CLI::NonNegativeNumber);
  sweep->add_option("--identities", identities, "Comma-separated names or 'all'")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  int q = 0;
  bool list = false, schroder = false, little = false;
  auto* paths = app.add_subcommand("paths", "q-Delannoy and q-Schröder paths");
  add_mn(paths);
  paths->add_option("--q", q, "Number of diagonal colors")->required()->check(CLI::NonNegativeNumber);
  paths->add_flag("--list", list, "Print the paths");
  auto* o_s = paths->add_flag("--schroder", schroder, "Keep q-Schröder paths");
  auto* o_l = paths->add_flag("--little", little, "Keep little q-Schröder paths");
  o_s->excludes(o_l);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  const CapPolicy policy = force ? CapPolicy::ignore : CapPolicy::enforce;
  if (force) err << "warning: resource caps disabled by --force\n";
  const Params p{m, n};
  Outcome outcome;
  try {
    if (enumerate->parsed()) {
      enumerate_cmd(p, json, policy, out);
    } else if (poset->parsed()) {
      if (labels && which == "shuf") throw UsageError("--labels is only available for the bubble order");
      const WordPoset wp = which == "bub" ? bubble_poset(p, policy) : shuffle_poset(p, policy);
      out << (out_format == "dot" ? to_dot(wp, labels) : to_json(wp, labels));
    } else if (complex->parsed()) {
      if (cwhich == "left" && m != n) throw UsageError("the left-leaning complex needs m = n");
      const Complex c = build_complex(complex_kind(cwhich), p, policy);
      out << (cout_format == "json" ? to_json(c) : fvector_text(c)) << '\n';
    } else if (triangle->parsed()) {
      triangle_cmd(twhich, p, closed, both, policy, out, outcome);
    } else if (verify->parsed()) {
      verify_cmd(identity, p, vjson, policy, out, outcome);
    } else if (sweep->parsed()) {
      sweep_cmd(max_r, identities, jobs, policy, out, outcome);
    } else if (paths->parsed()) {
      paths_cmd(m, n, q, list, schroder, little, policy, out, outcome);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return outcome.failed ? kExitFail : 0;
}

}  // namespace bubble::cli
