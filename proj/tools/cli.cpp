#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "trop/errors.hpp"
#include "trop/text.hpp"

namespace trop::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string file;
  std::string ring;
  std::string format = "text";
  std::string root;
  std::string omega = "quadratic";
  std::string u_start = "2";
  std::string u;
  std::string axiom = "all";
  std::string cofactor;
  unsigned u_cap = 12;
  unsigned cap = kDefaultOracleCap;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  bool verbose = false;
};

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_) {
      w.resize(std::max(w.size(), r.size()));
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string sat_text(const std::vector<unsigned>& sat) {
  std::vector<std::string> parts;
  for (unsigned k : sat) parts.push_back(std::to_string(k));
  return "{" + join(parts, ",") + "}";
}

std::string factorization_text(const Factorization& f) {
  std::vector<std::string> roots;
  for (const auto& r : f.roots) roots.push_back(to_string(r));
  return to_string(f.lead) + " ; " + join(roots, " ");
}

std::string fpoly_text(const FPoly& p) {
  std::vector<std::string> parts;
  for (long k = p.deg(); k >= 0; --k) {
    const PSeries& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string term = "(" + to_string(c) + ")";
    if (k >= 1) term += k == 1 ? " Y" : " Y^" + std::to_string(k);
    parts.push_back(term);
  }
  return parts.empty() ? "0" : join(parts, " + ");
}

std::string read_input(const Options& o, std::istream& in) {
  if (!o.file.empty()) {
    if (o.file == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(o.file);
    if (!f) throw ParseError("cannot read file '" + o.file + "'");
    return {std::istreambuf_iterator<char>(f), {}};
  }
  if (!o.input.empty()) return o.input;
  return {std::istreambuf_iterator<char>(in), {}};
}

bool looks_like_json(const std::string& s) {
  auto it = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
  return it != s.end() && (*it == '{' || *it == '[');
}

// Puiseux input: a JSON FPoly array, or ';'-separated roots whose product
// Π (Y − x_i) is taken.
FPoly read_fpoly(const std::string& text) {
  if (looks_like_json(text)) return io::fpoly_from_json(io::parse_json(text));
  return expand_linear_product(parse_pseries_list(text));
}

std::vector<PSeries> read_roots(const std::string& text) {
  if (looks_like_json(text)) {
    json j = io::parse_json(text);
    if (!j.is_array()) throw ParseError("root list must be a JSON array");
    std::vector<PSeries> r;
    for (const auto& e : j) r.push_back(io::pseries_from_json(e));
    return r;
  }
  return parse_pseries_list(text);
}

SPoly read_spoly(const std::string& text, const std::string& ring) {
  if (ring == "puiseux") return sv_poly(read_fpoly(text));
  if (ring != "smax" && ring != "bs") throw ParseError("ring must be smax, bs or puiseux here");
  SPoly p = looks_like_json(text) ? io::spoly_from_json(io::parse_json(text)) : parse_spoly(text);
  if (ring == "bs") to_bs_poly(p);  // rejects magnitudes other than 0
  return p;
}

TPoly read_tpoly(const std::string& text, const std::string& ring) {
  if (ring == "tmax")
    return looks_like_json(text) ? io::tpoly_from_json(io::parse_json(text)) : parse_tpoly(text);
  if (ring == "puiseux") return valuation_poly(read_fpoly(text));
  if (ring == "smax" || ring == "bs") return read_spoly(text, ring).abs();
  throw ParseError("unknown ring '" + ring + "'");
}

Omega read_omega(const std::string& tag) {
  if (tag == "quadratic") return omega_quadratic;
  throw ParseError("unknown omega '" + tag + "'");
}

std::string ring_or(const Options& o, const char* fallback) { return o.ring.empty() ? fallback : o.ring; }

std::vector<SVal> roots_to_check(const SPoly& p, const Options& o) {
  if (!o.root.empty()) return {parse_sval(o.root)};
  return root_candidates(p);
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// ---- commands -------------------------------------------------------------

void cmd_corners(const Options& o, const std::string& text, std::ostream& out) {
  TPoly p = read_tpoly(text, ring_or(o, "tmax"));
  CornerList cl = corners(p);
  std::vector<HullVertex> hv = newton_polygon(p);
  if (o.format == "json") {
    json j = {{"corners", io::to_json(cl)}};
    json v = json::array();
    for (const auto& h : hv) v.push_back({{"degree", h.degree}, {"value", to_string(h.value)}});
    j["newton_polygon"] = v;
    return emit(out, j);
  }
  Table t({"corner", "mult"});
  for (const auto& c : cl) t.add({to_string(c.value), std::to_string(c.mult)});
  t.print(out);
  if (o.verbose) {
    Table v({"degree", "value"});
    for (const auto& h : hv) v.add({std::to_string(h.degree), to_string(h.value)});
    out << '\n';
    v.print(out);
  }
}

void cmd_tpoly_result(const Options& o, const TPoly& r, std::ostream& out) {
  if (o.format == "json") return emit(out, io::to_json(r));
  out << to_string(r) << '\n';
}

void cmd_tfactor(const Options& o, const std::string& text, std::ostream& out) {
  TFactorization f = t_factor(read_tpoly(text, ring_or(o, "tmax")));
  std::vector<std::string> roots;
  json jr = json::array();
  for (const auto& r : f.roots) {
    roots.push_back(to_string(r));
    jr.push_back(io::to_json(r));
  }
  if (o.format == "json") return emit(out, {{"lead", io::to_json(f.lead)}, {"roots", jr}});
  Table t({"lead", "roots"});
  t.add({to_string(f.lead), join(roots, " ")});
  t.print(out);
}

void cmd_sfactor(const Options& o, const std::string& text, std::ostream& out) {
  SPoly p = read_spoly(text, ring_or(o, "smax"));
  std::optional<Factorization> direct = factor_function(p);
  UniquenessReport u = unique_factorization(p);
  MultFactorResult m = factor_from_multiplicities(p);
  if (o.format == "json") {
    return emit(out, {{"sufficient_condition", direct ? io::to_json(*direct) : json(nullptr)},
                      {"uniqueness", io::to_json(u)},
                      {"from_multiplicities", io::to_json(m)}});
  }
  Table t({"field", "value"});
  t.add({"sufficient_condition", direct ? factorization_text(*direct) : "not factored"});
  t.add({"uniqueness", to_string(u.kind)});
  if (u.factorization) t.add({"factorization", factorization_text(*u.factorization)});
  for (const auto& w : u.witnesses) t.add({"witness", factorization_text(w)});
  t.add({"mult_total", std::to_string(m.total)});
  t.add({"gap_condition", yes(m.gap_condition)});
  t.add({"from_multiplicities", m.factorization ? factorization_text(*m.factorization) : "cannot conclude"});
  t.print(out);
}

void cmd_roots(const Options& o, const std::string& text, std::ostream& out) {
  auto rs = signed_roots(read_spoly(text, ring_or(o, "smax")));
  if (o.format == "json") {
    json a = json::array();
    for (const auto& r : rs) a.push_back({{"root", io::to_json(r.value)}, {"is_root", r.is_root}});
    return emit(out, {{"candidates", a}});
  }
  Table t({"candidate", "root"});
  for (const auto& r : rs) t.add({to_string(r.value), yes(r.is_root)});
  t.print(out);
}

void cmd_mult(const Options& o, const std::string& text, std::ostream& out, bool oracle) {
  SPoly p = read_spoly(text, ring_or(o, "smax"));
  std::vector<MultReport> reports;
  for (const auto& r : roots_to_check(p, o))
    reports.push_back(oracle ? mult_oracle_report(p, r, o.cap) : mult(p, r));
  if (o.format == "json") {
    if (!o.root.empty()) {
      json j = io::to_json(reports.front());
      if (oracle && o.verbose) {
        json q = json::array();
        for (const auto& [lam, quot] : bs_quotients(to_bs_poly(reports.front().sat_poly),
                                                    sval_to_bs(SVal::el(reports.front().root.sign(), 0))))
          q.push_back({{"lambda", to_string(lam)}, {"quotient", io::to_json(from_bs_poly(quot), "bs")}});
        j["trace"] = q;
      }
      return emit(out, j);
    }
    json a = json::array();
    for (const auto& r : reports) a.push_back(io::to_json(r));
    return emit(out, {{"reports", a}});
  }
  Table t({"root", "mult", "sat", "path"});
  for (const auto& r : reports)
    t.add({to_string(r.root), std::to_string(r.mult), sat_text(r.sat), to_string(r.path)});
  t.print(out);
  if (o.verbose)
    for (const auto& r : reports) out << "sat_poly(" << to_string(r.root) << ") = " << to_string(r.sat_poly) << '\n';
}

void cmd_sv(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.ring.empty() && o.ring != "puiseux") throw ParseError("sv reads a Puiseux polynomial");
  SPoly s = sv_poly(read_fpoly(text));
  if (o.format == "json") return emit(out, io::to_json(s));
  out << to_string(s) << '\n';
}

void cmd_lift(const Options& o, const std::string& text, std::ostream& out) {
  SPoly p = read_spoly(text, ring_or(o, "smax"));
  Rational u = parse_rational(o.u.empty() ? o.u_start : o.u);
  FPoly f = viro_lift(p, u, read_omega(o.omega));
  if (o.format == "json") return emit(out, io::to_json(f));
  out << fpoly_text(f) << '\n';
}

void print_checks(const std::vector<RootCheck>& checks, std::ostream& out) {
  Table t({"root", "mult", "lifted", "determined", "equal", "bound", "mod2"});
  for (const auto& c : checks)
    t.add({to_string(c.root), std::to_string(c.mult), std::to_string(c.lifted_count), yes(c.determined),
           yes(c.equal), yes(c.bound_ok), yes(c.mod2_ok)});
  t.print(out);
}

int cmd_descartes(const Options& o, const std::string& text, std::ostream& out) {
  std::string ring = ring_or(o, "smax");
  if (ring == "puiseux") {
    // A given lift: an FPoly array is counted through its initial forms,
    // a root list (times --cofactor) through its known real roots.
    std::vector<RootCheck> checks;
    if (looks_like_json(text) && o.cofactor.empty()) {
      checks = check_lift(read_fpoly(text));
    } else {
      FPoly c = o.cofactor.empty() ? FPoly({PSeries::constant(1)}) : io::fpoly_from_json(io::parse_json(o.cofactor));
      checks = check_product_lift(read_roots(text), c);
    }
    if (o.format == "json") {
      json a = json::array();
      for (const auto& c : checks) a.push_back(io::to_json(c));
      emit(out, {{"roots", a}});
    } else {
      print_checks(checks, out);
    }
    return kOk;
  }
  DescartesOptions opt;
  opt.u_start = parse_rational(o.u_start);
  opt.u_cap = o.u_cap;
  opt.omega = read_omega(o.omega);
  DescartesReport d = verify_descartes(read_spoly(text, ring), opt);
  if (!d.success) {
    throw CapacityError("no tight lift within " + std::to_string(d.attempts) + " attempts: " + d.diagnostics);
  }
  if (o.format == "json") {
    json j = io::to_json(d);
    if (!o.verbose) j.erase("lift");
    return emit(out, j), kOk;
  }
  Table t({"field", "value"});
  t.add({"tight", yes(d.success)});
  t.add({"witness_u", to_string(*d.witness_u)});
  t.add({"attempts", std::to_string(d.attempts)});
  t.print(out);
  out << '\n';
  if (d.roots.empty()) out << "no roots\n";
  else print_checks(d.roots, out);
  if (o.verbose) out << "\nlift = " << fpoly_text(d.lift) << '\n';
  return kOk;
}

void cmd_kapranov(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.ring.empty() && o.ring != "puiseux") throw ParseError("kapranov reads a list of Puiseux roots");
  KapranovReport k = kapranov_check(read_roots(text));
  if (o.format == "json") return emit(out, io::to_json(k));
  std::vector<std::string> v, c;
  for (const auto& g : k.root_valuations) v.push_back(to_string(g));
  for (const auto& g : k.corners) c.push_back(to_string(g));
  Table t({"field", "value"});
  t.add({"holds", yes(k.holds)});
  t.add({"root_valuations", join(v, " ")});
  t.add({"corners", join(c, " ")});
  t.print(out);
}

void cmd_axioms(const Options& o, std::ostream& out) {
  std::string ring = ring_or(o, "smax");
  if (ring != "smax" && ring != "bs") throw ParseError("axioms run over --ring bs or smax");
  System sys = ring == "bs" ? System::Bs : System::Smax;
  std::vector<Law> laws;
  if (o.axiom == "all") laws.assign(kAllLaws.begin(), kAllLaws.end());
  else laws.push_back(parse_law(o.axiom));
  std::vector<Tuple> random;
  if (sys == System::Smax) random = smax_random_tuples(o.samples, o.seed);
  std::vector<LawReport> reports;
  for (Law law : laws) {
    if (sys == System::Bs) {
      auto tuples = bs_exhaustive_tuples(law_arity(law));
      reports.push_back(check_law(sys, law, tuples));
    } else {
      reports.push_back(check_law(sys, law, random));
    }
  }
  if (o.format == "json") {
    json a = json::array();
    for (const auto& r : reports) a.push_back(io::to_json(r));
    return emit(out, {{"system", ring}, {"results", a}});
  }
  Table t({"law", "tuples", "premises", "holds"});
  for (const auto& r : reports)
    t.add({to_string(r.law), std::to_string(r.tuples), std::to_string(r.premises_met), yes(r.holds)});
  t.print(out);
  for (const auto& r : reports)
    if (!r.holds) out << to_string(r.law) << " counterexample: " << r.counterexample << '\n';
}

void emit_error(std::ostream& out, const char* kind, const std::string& msg) {
  emit(out, {{"error", {{"kind", kind}, {"message", msg}}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app("Exact tropical and symmetrized tropical polynomial toolkit", "trop");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input) {
      sub->add_option("input", o.input, "Polynomial text or JSON (stdin when omitted)");
      sub->add_option("--file", o.file, "Read input from a file ('-' for stdin)");
    }
    sub->add_option("--ring", o.ring, "tmax, smax, bs or puiseux");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", o.verbose, "Extra output (hull vertices, oracle traces, lifts)");
    return sub;
  };

  auto* corners_cmd = common(app.add_subcommand("corners", "Corners of a max-plus polynomial"));
  auto* hull_cmd = common(app.add_subcommand("hull", "Concave hull (largest equivalent polynomial)"));
  auto* canon_cmd = common(app.add_subcommand("canonical", "Canonical form via Legendre-Fenchel"));
  auto* tfactor_cmd = common(app.add_subcommand("tfactor", "Max-plus factorization"));
  auto* sfactor_cmd = common(app.add_subcommand("sfactor", "Symmetrized factorization and uniqueness"));
  auto* roots_cmd = common(app.add_subcommand("roots", "Signed root candidates"));
  auto* mult_cmd = common(app.add_subcommand("mult", "Multiplicity by sign changes"));
  auto* oracle_cmd = common(app.add_subcommand("mult-oracle", "Multiplicity by exhaustive recursion"));
  auto* sv_cmd = common(app.add_subcommand("sv", "Signed valuation of a Puiseux polynomial"));
  auto* lift_cmd = common(app.add_subcommand("lift", "Viro lift for a given u"));
  auto* desc_cmd = common(app.add_subcommand("verify-descartes", "Search a tight lift, or check a given one"));
  auto* kap_cmd = common(app.add_subcommand("kapranov", "Root valuations vs corners of the valuation polynomial"));
  auto* ax_cmd = common(app.add_subcommand("axioms", "Axiom and balance-law harness"), false);

  for (auto* sub : {mult_cmd, oracle_cmd}) sub->add_option("--root", o.root, "Signed root (all candidates when omitted)");
  oracle_cmd->add_option("--cap", o.cap, "Largest degree the oracle accepts");
  for (auto* sub : {lift_cmd, desc_cmd}) sub->add_option("--omega", o.omega, "Weight family (quadratic)");
  lift_cmd->add_option("--u", o.u, "Base u of the lift");
  lift_cmd->add_option("--u-start", o.u_start, "Alias of --u");
  desc_cmd->add_option("--u-start", o.u_start, "First u tried");
  desc_cmd->add_option("--cofactor", o.cofactor, "FPoly JSON multiplying a root-list lift (--ring puiseux)");
  desc_cmd->add_option("--u-cap", o.u_cap, "Number of u values tried (u is squared each time)");
  ax_cmd->add_option("--axiom", o.axiom, "Law tag or 'all'");
  ax_cmd->add_option("--samples", o.samples, "Random S_max tuples");
  ax_cmd->add_option("--seed", o.seed, "Seed for random tuples");

  try {
    // Every option is long, so a single leading '-' marks a value such as
    // "-t^5 ; t" or "-(-1)". A leading space keeps CLI11 from reading it
    // as a short flag; the grammars skip whitespace.
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      bool value = it->size() > 1 && (*it)[0] == '-' && (*it)[1] != '-' && *it != "-h";
      rev.push_back(value ? " " + *it : *it);
    }
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    emit_error(out, "parse", e.what());
    return kParseError;
  }

  try {
    if (ax_cmd->parsed()) {
      cmd_axioms(o, out);
      return kOk;
    }
    const std::string text = read_input(o, in);
    if (corners_cmd->parsed()) cmd_corners(o, text, out);
    else if (hull_cmd->parsed()) cmd_tpoly_result(o, concave_hull(read_tpoly(text, ring_or(o, "tmax"))), out);
    else if (canon_cmd->parsed()) cmd_tpoly_result(o, canonical_form(read_tpoly(text, ring_or(o, "tmax"))), out);
    else if (tfactor_cmd->parsed()) cmd_tfactor(o, text, out);
    else if (sfactor_cmd->parsed()) cmd_sfactor(o, text, out);
    else if (roots_cmd->parsed()) cmd_roots(o, text, out);
    else if (mult_cmd->parsed()) cmd_mult(o, text, out, false);
    else if (oracle_cmd->parsed()) cmd_mult(o, text, out, true);
    else if (sv_cmd->parsed()) cmd_sv(o, text, out);
    else if (lift_cmd->parsed()) cmd_lift(o, text, out);
    else if (desc_cmd->parsed()) return cmd_descartes(o, text, out);
    else if (kap_cmd->parsed()) cmd_kapranov(o, text, out);
    return kOk;
  } catch (const ParseError& e) {
    emit_error(out, "parse", e.what());
    return kParseError;
  } catch (const DomainError& e) {
    emit_error(out, "domain", e.what());
    return kDomainError;
  } catch (const CapacityError& e) {
    emit_error(out, "capacity", e.what());
    return kCapacityError;
  }
}

}  // namespace trop::cli
