#include "cablejones/json_io.hpp"

#include "cablejones/errors.hpp"

namespace cj::io {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("expected a rational string or an integer, got " + j.dump());
}

Json to_json(const QLaurent& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) out.push_back(Json::array({t.e, t.c.get_str()}));
  return out;
}

QLaurent laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a list of [exponent_quarters, coefficient] pairs");
  std::vector<QLaurent::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw ParseError("bad polynomial term " + item.dump());
    Int c;
    if (item[1].is_string()) {
      if (c.set_str(item[1].get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + item[1].dump());
    } else if (item[1].is_number_integer()) {
      c = item[1].get<long>();
    } else {
      throw ParseError("bad coefficient " + item[1].dump());
    }
    terms.push_back({item[0].get<long>(), c});
  }
  return QLaurent::from_terms(std::move(terms));
}

Json to_json(const QuasiPoly& q) {
  Json coeffs = Json::array();
  for (const auto& r : q.coeffs()) coeffs.push_back(Json::array({r.a.str(), r.b.str(), r.d.str()}));
  return Json{{"period", q.period()}, {"valid_from", q.valid_from()}, {"coeffs", coeffs}};
}

QuasiPoly quasipoly_from_json(const Json& j) {
  try {
    std::vector<Residue> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_array() || c.size() != 3) throw ParseError("each residue needs [a, b, d]");
      coeffs.push_back({rat_from_json(c[0]), rat_from_json(c[1]), rat_from_json(c[2])});
    }
    long valid_from = j.contains("valid_from") ? j.at("valid_from").get<long>() : 1;
    QuasiPoly q(std::move(coeffs), valid_from);
    if (j.contains("period") && j.at("period").get<long>() % q.period() != 0)
      throw ParseError("stated period does not match the coefficients");
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quasi-polynomial JSON: ") + e.what());
  }
}

Json to_json(const SlopeSet& s) {
  Json out = Json::array();
  for (const auto& r : s.finite()) out.push_back(r.str());
  if (s.has_infinity()) out.push_back("inf");
  return out;
}

Json to_json(const SurfaceData& s) {
  return Json{{"slope", s.slope.str()}, {"euler", s.euler}, {"boundary_count", s.boundary_count}};
}

Json to_json(const CableParams& c) { return Json{{"p", c.p()}, {"q", c.q()}}; }

Json to_json(const CablePrediction& p) {
  Json branches = Json::array();
  for (auto b : p.residue_branch) branches.push_back(to_string(b));
  Json trace = Json::array();
  for (const auto& step : p.trace) {
    Json s{{"n", step.n}, {"k", step.winner.k().str()}, {"max", step.max.str()}};
    s["margin"] = step.margin ? Json(step.margin->str()) : Json(nullptr);
    trace.push_back(s);
  }
  return Json{{"params", to_json(p.params)},
              {"model", to_json(p.model)},
              {"jones_slopes", to_json(jones_slopes(p.model))},
              {"branches", branches},
              {"subcase", p.subcase},
              {"tied_below", p.tied_below},
              {"trace", trace}};
}

namespace {

Json rat_list(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json surface_list(const std::vector<SurfaceData>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

}  // namespace

Json to_json(const CatalogEntry& e) {
  Json flags{{"A_adequate", e.flags.A_adequate}, {"B_adequate", e.flags.B_adequate},
             {"torus", e.flags.torus},           {"cable", e.flags.cable},
             {"composite", e.flags.composite},   {"trivial", e.flags.trivial}};
  Json out{{"name", e.name},
           {"js", to_json(e.js)},
           {"js_star", to_json(e.js_star)},
           {"jx", to_json(e.jx)},
           {"jx_star", to_json(e.jx_star)},
           {"b", rat_list(e.b_fn)},
           {"b_star", rat_list(e.b_star_fn)},
           {"bs_known", to_json(e.bs_known)},
           {"surfaces", surface_list(e.surfaces)},
           {"mirror_surfaces", surface_list(e.mirror_surfaces)},
           {"flags", flags}};
  out["dplus"] = e.dplus ? to_json(*e.dplus) : Json(nullptr);
  out["dminus"] = e.dminus ? to_json(*e.dminus) : Json(nullptr);
  out["braid"] = e.braid ? Json(e.braid->str()) : Json(nullptr);
  out["note"] = e.note;
  return out;
}

Json to_json(const DeltaValue& d) {
  return Json{{"value", d.value.str()},
              {"point", Json::array({d.point.k1, d.point.k2})},
              {"case", to_string(d.which)},
              {"correction", d.correction.str()}};
}

Json to_json(const CheckResult& c) {
  Json details = Json::array();
  for (const auto& v : c.verdicts)
    details.push_back(Json{{"subject", v.subject}, {"status", to_string(v.status)}, {"detail", v.detail}});
  return Json{{"conjecture", c.conjecture}, {"side", c.side}, {"status", to_string(c.status)}, {"details", details}};
}

Json to_json(const ConjectureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"knot", r.knot}, {"checks", checks}};
}

std::map<long, Rat> samples_from_json(const Json& j) {
  std::map<long, Rat> out;
  try {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) out[std::stol(k)] = rat_from_json(v);
    } else if (j.is_array()) {
      for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2) throw ParseError("sample must be [n, value]");
        out[item[0].get<long>()] = rat_from_json(item[1]);
      }
    } else {
      throw ParseError("samples must be an object or a list");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("samples JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("sample keys must be integers");
  }
  return out;
}

}  // namespace cj::io
