/*
Copyright (c) 2026 fockcheck contributors. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#include "fockcheck/serialize.hpp"

#include <limits>

namespace fockcheck {

using nlohmann::json;

namespace {

// JSON has no infinities; they travel as strings.
json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double get_num(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::invalid_argument("not a number: " + s);
}

json vec(const MomentumVector& v) { return json::array({v.x, v.y, v.z}); }
MomentumVector get_vec(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

json map_json(const AffineCoordMap& m) { return {{"coef", m.coef}, {"shift", vec(m.shift)}}; }
AffineCoordMap get_map(const json& j) {
  AffineCoordMap m;
  m.coef = j.at("coef").get<std::vector<int>>();
  m.shift = get_vec(j.at("shift"));
  return m;
}

const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Gaussian: return "gaussian";
    case FactorKind::RadialPower: return "radial_power";
    case FactorKind::SetIndicator: return "indicator";
    case FactorKind::BallCutoff: return "ball_cutoff";
    case FactorKind::PnPower: return "pn_power";
  }
  return "";
}

FactorKind kind_from(const std::string& s) {
  for (FactorKind k : {FactorKind::Gaussian, FactorKind::RadialPower, FactorKind::SetIndicator, FactorKind::BallCutoff,
                       FactorKind::PnPower})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown factor kind: " + s);
}

const char* set_name(SetKind k) {
  switch (k) {
    case SetKind::E: return "E";
    case SetKind::F: return "F";
    case SetKind::F_complement: return "F_complement";
    case SetKind::D_ball_product: return "D_ball_product";
    case SetKind::X_annulus: return "X_annulus";
    case SetKind::E_prime: return "E_prime";
    case SetKind::F_max: return "F_max";
    case SetKind::T: return "T";
    case SetKind::T_complement: return "T_complement";
  }
  return "";
}

SetKind set_from(const std::string& s) {
  for (SetKind k : {SetKind::E, SetKind::F, SetKind::F_complement, SetKind::D_ball_product, SetKind::X_annulus,
                    SetKind::E_prime, SetKind::F_max, SetKind::T, SetKind::T_complement})
    if (s == set_name(k)) return k;
  throw std::invalid_argument("unknown set kind: " + s);
}

json coef_json(const Coefficient& c) {
  return {{"re", c.base.real()}, {"im", c.base.imag()}, {"two_pi_power", c.two_pi_power},
          {"sqrt_num", c.sqrt_num}, {"sqrt_den", c.sqrt_den}};
}

Coefficient get_coef(const json& j) {
  Coefficient c;
  c.base = {j.at("re").get<double>(), j.at("im").get<double>()};
  c.two_pi_power = j.at("two_pi_power").get<int>();
  c.sqrt_num = j.at("sqrt_num").get<std::int64_t>();
  c.sqrt_den = j.at("sqrt_den").get<std::int64_t>();
  return c;
}

json term_json(const Term& t) {
  json fs = json::array();
  for (const Factor& f : t.factors) fs.push_back(to_json(f));
  return {{"coefficient", coef_json(t.coefficient)}, {"factors", fs}};
}

Term get_term(const json& j) {
  Term t;
  t.coefficient = get_coef(j.at("coefficient"));
  for (const json& f : j.at("factors")) t.factors.push_back(factor_from_json(f));
  return t;
}

}  // namespace

json to_json(const Factor& f) {
  json j{{"kind", kind_name(f.kind)}};
  switch (f.kind) {
    case FactorKind::Gaussian:
      j["sigma"] = f.param;
      j["map"] = map_json(f.map);
      break;
    case FactorKind::RadialPower:
      j["exponent"] = f.param;
      j["map"] = map_json(f.map);
      break;
    case FactorKind::BallCutoff:
      j["log_lo"] = num(f.log_lo);
      j["log_hi"] = num(f.log_hi);
      j["map"] = map_json(f.map);
      break;
    case FactorKind::PnPower:
      j["n"] = f.pn_index;
      j["exponent"] = f.param;
      j["slots"] = f.slots;
      break;
    case FactorKind::SetIndicator:
      j["set"] = {{"kind", set_name(f.pred.kind)}, {"n", f.pred.n}, {"j", f.pred.j},
                  {"log_radius", num(f.pred.log_radius)}, {"index", f.pred.index},
                  {"shell_scale", f.pred.shell_scale}, {"negated", f.pred.negated}};
      j["slots"] = f.slots;
      break;
  }
  return j;
}

Factor factor_from_json(const json& j) {
  Factor f;
  f.kind = kind_from(j.at("kind").get<std::string>());
  switch (f.kind) {
    case FactorKind::Gaussian:
      f = Factor::gaussian(j.at("sigma").get<double>(), get_map(j.at("map")));
      break;
    case FactorKind::RadialPower:
      f = Factor::radial_power(j.at("exponent").get<double>(), get_map(j.at("map")));
      break;
    case FactorKind::BallCutoff:
      f = Factor::ball_cutoff(get_num(j.at("log_lo")), get_num(j.at("log_hi")), get_map(j.at("map")));
      break;
    case FactorKind::PnPower:
      f = Factor::pn_power(j.at("n").get<int>(), j.at("exponent").get<double>(), j.at("slots").get<std::vector<int>>());
      break;
    case FactorKind::SetIndicator: {
      const json& s = j.at("set");
      SetPredicate p = SetPredicate::make(set_from(s.at("kind").get<std::string>()), s.at("n").get<int>(),
                                          s.at("j").get<int>());
      p.log_radius = get_num(s.at("log_radius"));
      p.index = s.at("index").get<std::vector<int>>();
      p.shell_scale = s.at("shell_scale").get<double>();
      p.negated = s.at("negated").get<bool>();
      f = Factor::indicator(p, j.at("slots").get<std::vector<int>>());
      break;
    }
  }
  return f;
}

json to_json(const SectorFunction& f) {
  json terms = json::array();
  for (const Term& t : f.terms) terms.push_back(term_json(t));
  json integrated = json::array();
  for (const IntegratedTerm& t : f.integrated) {
    json outer = json::array();
    for (const Factor& x : t.outer) outer.push_back(to_json(x));
    json args = json::array();
    for (const AffineCoordMap& a : t.args) args.push_back(map_json(a));
    integrated.push_back({{"coefficient", coef_json(t.coefficient)},
                          {"outer", outer},
                          {"inner", term_json(*t.inner)},
                          {"inner_sector", t.inner_sector},
                          {"slot", t.slot},
                          {"weight_exponent", t.weight_exponent},
                          {"shift_sign", t.shift_sign},
                          {"args", args},
                          {"quadrature",
                           {{"radial_order", t.quad.radial_order},
                            {"radial_panels", t.quad.radial_panels},
                            {"angular_order", t.quad.angular_order},
                            {"tolerance", t.quad.tolerance},
                            {"truncation_radius", t.quad.truncation_radius}}}});
  }
  return {{"sector", f.sector}, {"terms", terms}, {"integrated", integrated}};
}

SectorFunction sector_from_json(const json& j) {
  SectorFunction f;
  f.sector = j.at("sector").get<int>();
  for (const json& t : j.at("terms")) f.terms.push_back(get_term(t));
  for (const json& t : j.at("integrated")) {
    IntegratedTerm it;
    it.coefficient = get_coef(t.at("coefficient"));
    for (const json& x : t.at("outer")) it.outer.push_back(factor_from_json(x));
    it.inner = std::make_shared<const Term>(get_term(t.at("inner")));
    it.inner_sector = t.at("inner_sector").get<int>();
    it.slot = t.at("slot").get<int>();
    it.weight_exponent = t.at("weight_exponent").get<double>();
    it.shift_sign = t.at("shift_sign").get<int>();
    for (const json& a : t.at("args")) it.args.push_back(get_map(a));
    const json& q = t.at("quadrature");
    it.quad.radial_order = q.at("radial_order").get<int>();
    it.quad.radial_panels = q.at("radial_panels").get<int>();
    it.quad.angular_order = q.at("angular_order").get<int>();
    it.quad.tolerance = q.at("tolerance").get<double>();
    it.quad.truncation_radius = q.at("truncation_radius").get<double>();
    f.integrated.push_back(std::move(it));
  }
  return f;
}

json to_json(const FockState& s) {
  json sectors = json::array();
  for (const auto& [n, f] : s.sectors) sectors.push_back(to_json(f));
  return {{"sectors", sectors}};
}

FockState state_from_json(const json& j) {
  FockState s;
  for (const json& f : j.at("sectors")) {
    SectorFunction g = sector_from_json(f);
    const int n = g.sector;
    s.sectors.emplace(n, std::move(g));
  }
  return s;
}

}  // namespace fockcheck
