#include "io.hpp"

#include "trop/errors.hpp"
#include "trop/text.hpp"

namespace trop::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j) {
  if (!j.is_string()) throw ParseError("expected a JSON string, got " + j.dump());
  return j.get<std::string>();
}

unsigned degree_key(const std::string& k) {
  Rational q = parse_rational(k);
  if (q.get_den() != 1 || q < 0) throw ParseError("bad degree key '" + k + "'");
  return static_cast<unsigned>(q.get_num().get_ui());
}

}  // namespace

json to_json(const GVal& g) { return to_string(g); }

json to_json(const SVal& v) {
  if (v.is_zero()) return {{"zero", true}};
  return {{"sign", to_string(v.sign())}, {"mag", to_string(v.mag())}};
}

json to_json(const TPoly& p) {
  json c = json::object();
  for (const auto& [k, v] : p.terms()) c[std::to_string(k)] = to_string(v);
  return {{"ring", "tmax"}, {"coeffs", c}};
}

json to_json(const SPoly& p, std::string_view ring) {
  json c = json::object();
  for (const auto& [k, v] : p.terms()) c[std::to_string(k)] = to_json(v);
  return {{"ring", std::string(ring)}, {"coeffs", c}};
}

json to_json(const PSeries& f) { return to_string(f); }

json to_json(const FPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const CornerList& cl) {
  json a = json::array();
  for (const auto& c : cl) a.push_back({{"corner", to_json(c.value)}, {"mult", c.mult}});
  return a;
}

json to_json(const Factorization& f) {
  json roots = json::array();
  for (const auto& r : f.roots) roots.push_back(to_json(r));
  return {{"lead", to_json(f.lead)}, {"roots", roots}};
}

json to_json(const MultReport& r) {
  return {{"root", to_json(r.root)},
          {"mult", r.mult},
          {"sat", r.sat},
          {"sat_poly", to_json(r.sat_poly, "bs")},
          {"path", to_string(r.path)}};
}

json to_json(const UniquenessReport& u) {
  json w = json::array();
  for (const auto& f : u.witnesses) w.push_back(to_json(f));
  return {{"kind", to_string(u.kind)},
          {"factorization", u.factorization ? to_json(*u.factorization) : json(nullptr)},
          {"witnesses", w}};
}

json to_json(const MultSum& m) {
  json pc = json::array();
  for (const auto& t : m.per_corner)
    pc.push_back({{"corner", to_json(t.corner)},
                  {"corner_mult", t.corner_mult},
                  {"mult_pos", t.mult_pos},
                  {"mult_neg", t.mult_neg}});
  return {{"total", m.total},
          {"per_corner", pc},
          {"corner_bounds_hold", m.corner_bounds_hold},
          {"degree_bound_holds", m.degree_bound_holds}};
}

json to_json(const MultFactorResult& m) {
  return {{"total", m.total},
          {"gap_condition", m.gap_condition},
          {"function_matches", m.function_matches},
          {"factorization", m.factorization ? to_json(*m.factorization) : json(nullptr)}};
}

json to_json(const RootCheck& c) {
  return {{"root", to_json(c.root)},     {"mult", c.mult},   {"lifted_count", c.lifted_count},
          {"determined", c.determined},  {"equal", c.equal}, {"bound_ok", c.bound_ok},
          {"mod2_ok", c.mod2_ok}};
}

json to_json(const DescartesReport& d) {
  json roots = json::array();
  for (const auto& c : d.roots) roots.push_back(to_json(c));
  return {{"success", d.success},
          {"witness_u", d.witness_u ? json(to_string(*d.witness_u)) : json(nullptr)},
          {"attempts", d.attempts},
          {"roots", roots},
          {"lift", d.success ? to_json(d.lift) : json(nullptr)}};
}

json to_json(const KapranovReport& k) {
  json v = json::array(), c = json::array();
  for (const auto& g : k.root_valuations) v.push_back(to_json(g));
  for (const auto& g : k.corners) c.push_back(to_json(g));
  return {{"holds", k.holds}, {"root_valuations", v}, {"corners", c}};
}

json to_json(const LawReport& r) {
  return {{"law", to_string(r.law)},
          {"tuples", r.tuples},
          {"premises_met", r.premises_met},
          {"holds", r.holds},
          {"counterexample", r.counterexample}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

GVal gval_from_json(const json& j) { return parse_gval(str(j)); }

SVal sval_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("SVal must be a JSON object");
  if (j.contains("zero")) {
    if (j.size() != 1 || j.at("zero") != true) throw ParseError("bad zero SVal " + j.dump());
    return SVal::zero();
  }
  if (j.size() != 2) throw ParseError("SVal needs exactly 'sign' and 'mag'");
  std::string s = str(field(j, "sign"));
  Rational m = parse_rational(str(field(j, "mag")));
  if (s == "+") return SVal::pos(m);
  if (s == "-") return SVal::neg(m);
  if (s == "o") return SVal::bal(m);
  throw ParseError("sign must be '+', '-' or 'o'");
}

TPoly tpoly_from_json(const json& j) {
  if (str(field(j, "ring")) != "tmax") throw ParseError("expected ring 'tmax'");
  const json& c = field(j, "coeffs");
  if (!c.is_object()) throw ParseError("coeffs must be an object");
  TPoly p;
  for (const auto& [k, v] : c.items()) {
    GVal g = gval_from_json(v);
    if (g.is_bot()) throw ParseError("-inf coefficients are omitted, not stored");
    p.set(degree_key(k), g);
  }
  return p;
}

SPoly spoly_from_json(const json& j) {
  std::string ring = str(field(j, "ring"));
  if (ring != "smax" && ring != "bs") throw ParseError("expected ring 'smax' or 'bs'");
  const json& c = field(j, "coeffs");
  if (!c.is_object()) throw ParseError("coeffs must be an object");
  SPoly p;
  for (const auto& [k, v] : c.items()) {
    SVal s = sval_from_json(v);
    if (s.is_zero()) throw ParseError("zero coefficients are omitted, not stored");
    p.set(degree_key(k), s);
  }
  return p;
}

PSeries pseries_from_json(const json& j) { return parse_pseries(str(j)); }

FPoly fpoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("FPoly must be a JSON array indexed by degree");
  std::vector<PSeries> c;
  for (const auto& e : j) c.push_back(pseries_from_json(e));
  return FPoly(std::move(c));
}

}  // namespace trop::io
