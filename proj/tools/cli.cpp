#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "igusa/algebra/parse.hpp"
#include "igusa/errors.hpp"
#include "igusa/graph_io.hpp"
#include "igusa/monodromy.hpp"
#include "igusa/oracle.hpp"
#include "igusa/resolution.hpp"
#include "igusa/zeta.hpp"

namespace igusa::cli {

namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> polys;
  std::string graph_path;
  long p = 0;
  std::string chi;
  bool chi_all = false;
  std::string phi = "unit-ball";
  int bound = 3;
  double budget = 1e8;
  unsigned shards = 1;
  unsigned threads = 1;
  std::string out;
  std::string dot;
  std::string format = "json";
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) out << text;
  else write_file(o.out, text);
}

std::vector<PolyQ> parse_inputs(const Options& o) {
  std::vector<PolyQ> F;
  for (const auto& s : o.polys) F.push_back(parse_polynomial(s));
  return F;
}

ResolutionGraph load_graph(const Options& o) {
  if (!o.graph_path.empty()) return graph_from_json(read_file(o.graph_path));
  if (o.polys.empty()) throw ParseError("no input: give -f/--poly or --graph");
  return resolve(parse_inputs(o));
}

long require_prime(const Options& o) {
  if (o.p == 0) throw ParseError("this command needs -p");
  if (!is_prime(o.p)) throw ParseError(std::to_string(o.p) + " is not prime");
  return o.p;
}

std::vector<CharacterTuple> characters(const Options& o, long p, std::size_t r) {
  if (o.chi_all) return CharacterTuple::all(p, r);
  if (o.chi.empty()) return {CharacterTuple::trivial(p, r)};
  std::vector<long> e;
  std::stringstream ss(o.chi);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      e.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad character exponent '" + item + "'");
    }
  }
  if (e.size() != r) throw ParseError("--chi needs " + std::to_string(r) + " exponent(s)");
  for (long v : e)
    if (v < 0 || v > p - 2) throw ParseError("character exponents must lie in [0, p-2]");
  return {CharacterTuple::make(p, e)};
}

ResidualFunction residual(const Options& o) {
  if (o.phi == "unit-ball") return ResidualFunction::unit_ball();
  if (o.phi == "origin-class") return ResidualFunction::origin_class();
  if (o.phi.rfind("table=", 0) == 0) return ResidualFunction::from_json(read_file(o.phi.substr(6)));
  throw ParseError("--phi must be unit-ball, origin-class or table=PATH");
}

std::string set_string(const std::set<Hyperplane>& hs) {
  std::string s = "{";
  bool first = true;
  for (const auto& h : hs) {
    s += (first ? "" : ", ") + h.to_string();
    first = false;
  }
  return s + "}";
}

json set_json(const std::set<Hyperplane>& hs) {
  json j = json::array();
  for (const auto& h : hs) j.push_back({{"N", h.N}, {"nu", h.nu}, {"text", h.to_string()}});
  return j;
}

std::string point_text(const RationalPoint& p) { return "(" + p.u.to_string() + "," + p.v.to_string() + ")"; }

int cmd_resolve(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  if (!o.out.empty()) write_file(o.out, graph_to_json(g));
  if (!o.dot.empty()) write_file(o.dot, export_dual_graph(g));
  if (o.json) {
    out << graph_to_json(g);
    return kOk;
  }
  std::ostringstream os;
  os << "divisors:\n";
  for (const auto& d : g.divisors) {
    os << "  E" << d.id << (d.kind == DivisorKind::Strict ? " strict" : " exceptional") << " N=(";
    for (std::size_t j = 0; j < d.N.size(); ++j) os << (j ? "," : "") << d.N[j];
    os << ") nu=" << d.nu;
    if (d.equation) os << "  " << d.equation->to_string();
    if (d.base_point) os << "  over " << point_text(g.lineage.at(static_cast<std::size_t>(*d.base_point)).point);
    os << "\n";
  }
  os << "intersections:\n";
  for (const auto& ip : g.intersections) {
    os << "  E" << ip.first << " -- E" << ip.second;
    if (ip.base) os << " over " << point_text(*ip.base);
    os << "\n";
  }
  bool ok = true;
  for (const auto& c : validate_star_relations(g)) {
    if (c.sum_ok && c.divisibility_ok) continue;
    ok = false;
    os << "  relation fails at E" << c.divisor << " (f" << c.component + 1 << "): sum " << c.alpha_sum.to_string()
       << "\n";
  }
  os << "relations: " << (ok ? "ok" : "FAILED") << "\n";
  out << os.str();
  return ok ? kOk : kMismatch;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  long p = require_prime(o);
  ReducedGraph rg = reduce_mod_p(g, p);
  ResidualFunction phi = residual(o);
  std::string text;
  json arr = json::array();
  for (const auto& chi : characters(o, p, g.r)) {
    ZetaFunction Z = denef_zeta(rg, chi, phi);
    auto poles = actual_polar_hyperplanes(Z);
    if (o.json) {
      json j = json::parse(zeta_to_json(Z));
      j["poles"] = set_json(poles);
      arr.push_back(j);
    } else {
      text += zeta_to_text(Z) + "poles: " + set_string(poles) + "\n";
    }
  }
  emit(o, o.json ? arr.dump(2) + "\n" : text, out);
  return kOk;
}

int cmd_poles(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  std::optional<long> p;
  if (o.p != 0) p = require_prime(o);
  std::vector<std::optional<CharacterTuple>> chis;
  if (p) {
    for (auto& c : characters(o, *p, g.r)) chis.push_back(c);
  } else {
    chis.push_back(std::nullopt);
  }
  std::optional<ReducedGraph> rg;
  if (p && g.has_charts()) rg = reduce_mod_p(g, *p);
  std::string text;
  json arr = json::array();
  for (const auto& chi : chis) {
    auto cand = candidate_poles(g, chi);
    auto unmasked = unmask_filter(g, cand);
    std::optional<std::set<Hyperplane>> actual;
    if (rg) actual = actual_polar_hyperplanes(denef_zeta(*rg, *chi, residual(o)));
    json j{{"candidates", set_json(cand)}, {"unmasked", set_json(unmasked)}};
    if (chi) j["chi"] = chi->exponents;
    if (actual) j["actual"] = set_json(*actual);
    arr.push_back(j);
    if (chi) text += "chi = " + chi->to_string() + "\n";
    text += "candidates: " + set_string(cand) + "\n";
    text += "unmasked:   " + set_string(unmasked) + "\n";
    if (actual) text += "actual:     " + set_string(*actual) + "\n";
  }
  emit(o, o.json ? arr.dump(2) + "\n" : text, out);
  return kOk;
}

int cmd_monodromy(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  std::string text;
  json arr = json::array();
  for (const auto& b : monodromy_base_points(g)) {
    auto zeta = sabbah_zeta(g, b);
    auto bound = alexander_support_bound(g, b);
    auto cert = support_certificate(g, b);
    text += b.description + "\n  zeta: " + zeta.to_string() + "\n  support bound:\n";
    json jb = json::array(), jc = json::array(), jz = json::array();
    for (const auto& z : bound) {
      text += "    " + z.to_string() + "\n";
      jb.push_back({{"N", z.N}, {"tau", z.tau.to_string()}});
    }
    text += "  certified:\n";
    for (const auto& c : cert) {
      text += "    " + c.cotorus.to_string() + " exponent " + std::to_string(c.exponent) + "\n";
      jc.push_back({{"N", c.cotorus.N}, {"tau", c.cotorus.tau.to_string()}, {"exponent", c.exponent}});
    }
    for (const auto& [N, e] : zeta.factors) jz.push_back({{"N", N}, {"exponent", e}});
    arr.push_back({{"base", b.description}, {"zeta", jz}, {"support_bound", jb}, {"certified", jc}});
  }
  emit(o, o.json ? arr.dump(2) + "\n" : text, out);
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  long p = require_prime(o);
  ReducedGraph rg = reduce_mod_p(g, p);
  ResidualFunction phi = residual(o);
  auto chis = characters(o, p, g.r);
  bool ok = true;
  std::string text;
  json mono = json::array();
  for (const auto& chi : chis) {
    auto report = check_monodromy_conjecture(g, denef_zeta(rg, chi, phi));
    ok = ok && report.all_verified();
    text += "monodromy, chi = " + chi.to_string() + ":\n" + report.to_text();
    json j = json::parse(report.to_json());
    j["chi"] = chi.exponents;
    mono.push_back(j);
  }
  auto holo = check_holomorphy_conjecture(g, chis, p, phi);
  ok = ok && holo.all_verified();
  text += "holomorphy:\n" + holo.to_text();
  text += std::string("overall: ") + (ok ? "verified" : "not verified") + "\n";
  json j{{"monodromy", mono}, {"holomorphy", json::parse(holo.to_json())["characters"]}, {"verified", ok}};
  emit(o, o.json ? j.dump(2) + "\n" : text, out);
  return ok ? kOk : kMismatch;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  long p = require_prime(o);
  std::vector<PolyQ> F = o.polys.empty() ? g.polynomials : parse_inputs(o);
  ReducedGraph rg = reduce_mod_p(g, p);
  ResidualFunction phi = residual(o);
  OracleOptions opt{o.bound, o.budget, o.shards, o.threads};
  OracleHistogram h = enumerate_histogram(F, p, opt);
  bool ok = true;
  std::string text;
  json arr = json::array();
  for (const auto& chi : characters(o, p, g.r)) {
    auto cmp = compare_with_closed_form(denef_zeta(rg, chi, phi), coefficient_table(h, chi, phi, o.bound));
    ok = ok && cmp.equal;
    text += "chi = " + chi.to_string() + ", phi = " + phi.tag() + ": " + cmp.to_text();
    json j{{"chi", chi.exponents}, {"phi", phi.tag()}, {"equal", cmp.equal}};
    if (!cmp.equal)
      j["mismatch"] = {{"k", *cmp.k}, {"closed_form", cmp.closed_form.to_string()}, {"oracle", cmp.oracle.to_string()}};
    arr.push_back(j);
  }
  emit(o, o.json ? arr.dump(2) + "\n" : text, out);
  return ok ? kOk : kMismatch;
}

int cmd_export(const Options& o, std::ostream& out) {
  ResolutionGraph g = load_graph(o);
  if (o.format == "dot") emit(o, export_dual_graph(g), out);
  else if (o.format == "json") emit(o, graph_to_json(g), out);
  else throw ParseError("--format must be dot or json");
  return kOk;
}

void add_input(CLI::App* c, Options& o) {
  c->add_option("-f,--poly", o.polys, "polynomial in x, y (repeat for several)");
  c->add_option("--graph", o.graph_path, "resolution graph JSON instead of resolving");
}

void add_character(CLI::App* c, Options& o) {
  c->add_option("-p", o.p, "prime");
  c->add_option("--chi", o.chi, "character exponents e1,...,er");
  c->add_flag("--chi-all", o.chi_all, "every character tuple of order dividing p-1");
  c->add_option("--phi", o.phi, "unit-ball, origin-class or table=PATH");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Igusa zeta functions of plane curves"};
  app.name(args.empty() ? "igusa" : args[0]);
  app.require_subcommand(1);

  auto* resolve_cmd = app.add_subcommand("resolve", "embedded resolution summary; -o writes the graph JSON");
  add_input(resolve_cmd, o);
  resolve_cmd->add_option("-o", o.out, "graph JSON path");
  resolve_cmd->add_option("--dot", o.dot, "DOT path");
  resolve_cmd->add_flag("--json", o.json, "print the graph JSON");

  auto* zeta_cmd = app.add_subcommand("zeta", "closed form of the zeta function");
  auto* poles_cmd = app.add_subcommand("poles", "candidate, unmasked and actual polar hyperplanes");
  auto* check_cmd = app.add_subcommand("check-conjectures", "monodromy and holomorphy checks");
  auto* oracle_cmd = app.add_subcommand("oracle-verify", "compare with brute-force enumeration");
  for (auto* c : {zeta_cmd, poles_cmd, check_cmd, oracle_cmd}) {
    add_input(c, o);
    add_character(c, o);
    c->add_option("-o", o.out, "output path");
    c->add_flag("--json", o.json, "structured output");
  }
  oracle_cmd->add_option("-B", o.bound, "truncation bound on the total degree")->check(CLI::Range(0, 64));
  oracle_cmd->add_option("--budget", o.budget, "maximum number of residue classes");
  oracle_cmd->add_option("--shards", o.shards, "number of shards")->check(CLI::Range(1u, 1000000u));
  oracle_cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* mono_cmd = app.add_subcommand("monodromy", "monodromy zeta functions and support data");
  add_input(mono_cmd, o);
  mono_cmd->add_option("-o", o.out, "output path");
  mono_cmd->add_flag("--json", o.json, "structured output");

  auto* export_cmd = app.add_subcommand("export-graph", "write the resolution graph");
  add_input(export_cmd, o);
  export_cmd->add_option("--format", o.format, "dot or json");
  export_cmd->add_option("-o", o.out, "output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (resolve_cmd->parsed()) return cmd_resolve(o, out);
    if (zeta_cmd->parsed()) return cmd_zeta(o, out);
    if (poles_cmd->parsed()) return cmd_poles(o, out);
    if (mono_cmd->parsed()) return cmd_monodromy(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (export_cmd->parsed()) return cmd_export(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NonRationalCenter& e) {
    err << "error: " << e.what() << "\n";
    return kNonRational;
  } catch (const BadPrime& e) {
    err << "error: " << e.what() << "\n";
    return kBadPrime;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kOtherError;
  }
  return kOtherError;
}

}  // namespace igusa::cli
