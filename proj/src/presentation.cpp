#include "cablejones/presentation.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "cablejones/families.hpp"

namespace cj {

namespace {

std::string trim(std::string_view s) {
  size_t a = s.find_first_not_of(" \t\n\r");
  if (a == std::string_view::npos) return {};
  size_t b = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(a, b - a + 1));
}

std::pair<long, long> parse_pair(const std::string& text, const std::string& what) {
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  long a = 0, b = 0;
  std::string extra;
  if (!(in >> a >> b) || (in >> extra)) throw ParseError("expected two integers for " + what + ", got '" + text + "'");
  return {a, b};
}

}  // namespace

KnotPresentation KnotPresentation::parse(std::string_view text) {
  std::string t = trim(text);
  auto colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("knot presentation needs a 'kind:' prefix: '" + t + "'");
  std::string kind = t.substr(0, colon);
  std::string body = trim(std::string_view(t).substr(colon + 1));
  if (kind == "torus") {
    auto [p, q] = parse_pair(body, "torus");
    if (p == 0 || q == 0) throw ParameterError("torus parameters must be nonzero");
    if (std::gcd(p, q) != 1) throw ParameterError("torus parameters must be coprime");
    return KnotPresentation(TorusSpec{p, q});
  }
  if (kind == "braid") return KnotPresentation(BraidWord::parse(body));
  if (kind == "pd") return KnotPresentation(PDCode::parse_json(body));
  if (kind == "fusion") {
    auto [m1, m2] = parse_pair(body, "fusion");
    return KnotPresentation(FusionParams(m1, m2));
  }
  if (kind == "catalog") {
    catalog(body);  // validates the name
    return KnotPresentation(CatalogRef{body});
  }
  if (kind == "cable") {
    auto semi = body.rfind(';');
    if (semi == std::string::npos) throw ParseError("cable presentation needs '<base>;p,q'");
    auto [p, q] = parse_pair(body.substr(semi + 1), "cable");
    auto base = std::make_shared<const KnotPresentation>(parse(body.substr(0, semi)));
    return KnotPresentation(CableSpec{base, CableParams(p, q)});
  }
  throw ParseError("unknown knot presentation kind '" + kind + "'");
}

std::string KnotPresentation::str() const {
  struct Printer {
    std::string operator()(const BraidWord& b) const { return "braid:" + b.str(); }
    std::string operator()(const PDCode& d) const { return "pd:" + d.to_json(); }
    std::string operator()(const TorusSpec& t) const {
      return "torus:" + std::to_string(t.p) + "," + std::to_string(t.q);
    }
    std::string operator()(const CableSpec& c) const {
      return "cable:" + c.base->str() + ";" + std::to_string(c.params.p()) + "," + std::to_string(c.params.q());
    }
    std::string operator()(const FusionParams& f) const {
      return "fusion:" + std::to_string(f.m1()) + "," + std::to_string(f.m2());
    }
    std::string operator()(const CatalogRef& c) const { return "catalog:" + c.name; }
  };
  return std::visit(Printer{}, v_);
}

JonesSource jones_source(const KnotPresentation& k, const EvaluatorBudget& budget) {
  if (const auto* c = std::get_if<CableSpec>(&k.value())) {
    JonesSource base = jones_source(*c->base, budget);
    CableParams params = c->params;
    return memoize([base, params](long n) { return cable_jones(base, params, n); });
  }
  auto held = std::make_shared<KnotPresentation>(k);
  return memoize([held, budget](long n) { return presentation_jones(*held, n, budget); });
}

QLaurent presentation_jones(const KnotPresentation& k, long n, const EvaluatorBudget& budget) {
  if (n < 1) throw DomainError("color must be positive");
  const auto& v = k.value();
  if (const auto* b = std::get_if<BraidWord>(&v)) {
    b->require_knot();
    return colored_jones(*b, n, budget);
  }
  if (const auto* d = std::get_if<PDCode>(&v)) {
    d->require_knot();
    return colored_jones(*d, n, budget);
  }
  if (const auto* t = std::get_if<TorusSpec>(&v)) return torus_jones(t->p, t->q, n);
  if (const auto* c = std::get_if<CableSpec>(&v)) return cable_jones(jones_source(*c->base, budget), c->params, n);
  if (std::holds_alternative<FusionParams>(v))
    throw DomainError("fusion knots carry degree formulas only, no diagram to evaluate");
  const auto& name = std::get<CatalogRef>(v).name;
  CatalogEntry e = catalog(name);
  if (e.flags.trivial) return unknot_jones(n);
  if (!e.braid) throw DomainError("no diagram on file for catalog knot " + name);
  return colored_jones(*e.braid, n, budget);
}


QuasiPoly degree_model(const KnotPresentation& k) {
  const auto& v = k.value();
  if (const auto* t = std::get_if<TorusSpec>(&v)) return torus_degree(t->p, t->q);
  if (const auto* f = std::get_if<FusionParams>(&v)) return dplus_model(*f);
  if (const auto* c = std::get_if<CableSpec>(&v)) return cable_degree_model(degree_model(*c->base), c->params);
  if (const auto* b = std::get_if<BraidWord>(&v)) return adequate_dplus(adequate_summary(*b));
  if (const auto* d = std::get_if<PDCode>(&v)) return adequate_dplus(adequate_summary(*d));
  CatalogEntry e = catalog(std::get<CatalogRef>(v).name);
  if (!e.dplus) throw DomainError("no d_+ formula on file for " + e.name);
  return *e.dplus;
}

QuasiPoly degree_model_minus(const KnotPresentation& k) {
  const auto& v = k.value();
  if (const auto* t = std::get_if<TorusSpec>(&v)) return mirror_model(torus_degree(-t->p, t->q));
  if (const auto* f = std::get_if<FusionParams>(&v))
    return mirror_model(dplus_model(FusionParams(1 - f->m1(), -1 - f->m2())));
  if (const auto* c = std::get_if<CableSpec>(&v)) {
    QuasiPoly base_mirror = mirror_model(degree_model_minus(*c->base));
    CableParams mp(-c->params.p(), c->params.q());
    return mirror_model(cable_degree_model(base_mirror, mp));
  }
  if (const auto* b = std::get_if<BraidWord>(&v)) return adequate_dminus(adequate_summary(*b));
  if (const auto* d = std::get_if<PDCode>(&v)) return adequate_dminus(adequate_summary(*d));
  CatalogEntry e = catalog(std::get<CatalogRef>(v).name);
  if (!e.dminus) throw DomainError("no d_- formula on file for " + e.name);
  return *e.dminus;
}

JonesSource model_jones_source(const QuasiPoly& dplus, const QuasiPoly& dminus) {
  return memoize([dplus, dminus](long m) {
    Rat hi = dplus.eval(m), lo = dminus.eval(m);
    auto quarter = [](const Rat& r) {
      Rat q = r * Rat(4);
      if (!q.is_integer()) throw DomainError("degree model leaves quarter-integer exponents");
      return q.num().get_si();
    };
    QLaurent out = QLaurent::monomial(quarter(hi), 1);
    if (hi != lo) out += QLaurent::monomial(quarter(lo), 1);
    return out;
  });
}

}  // namespace cj
