#include "cablejones/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <regex>

#include "cablejones/errors.hpp"
#include "cablejones/families.hpp"
#include "cablejones/fusion.hpp"

namespace cj {

namespace {

Rat R(long n, long d = 1) { return Rat(n, d); }

QuasiPoly three_periodic(Rat a, Rat b_off, Rat d_off, Rat b_on, Rat d_on) {
  // n = 0 (mod 3) takes the "on" pair
  return QuasiPoly({{a, b_on, d_on}, {a, b_off, d_off}, {a, b_off, d_off}});
}

QuasiPoly two_periodic(Rat a, Rat b, Rat d_even, Rat d_odd) { return QuasiPoly({{a, b, d_even}, {a, b, d_odd}}); }

// js, js*, 2b, 2b* for a knot whose b and b* are constant.
CatalogEntry slope_row(const std::string& name, Rat js, Rat js_star, Rat b, Rat b_star) {
  CatalogEntry e;
  e.name = name;
  e.js = {js};
  e.js_star = {js_star};
  e.b_fn = {b};
  e.b_star_fn = {b_star};
  e.jx = {R(2) * b};
  e.jx_star = {R(2) * b_star};
  e.bs_known = {js, js_star};
  return e;
}

void add_surfaces(CatalogEntry& e, long chi, long boundary, long chi_star, long boundary_star) {
  e.surfaces.emplace_back(*e.js.finite().begin(), chi, boundary);
  e.mirror_surfaces.emplace_back(*e.js_star.finite().begin(), chi_star, boundary_star);
}

void fill_from_model(CatalogEntry& e, const QuasiPoly& dplus) {
  e.dplus = dplus;
  e.js = jones_slopes(dplus);
  e.jx = jx_set(dplus);
  e.b_fn.clear();
  for (const auto& r : dplus.coeffs()) e.b_fn.push_back(r.b);
}

// Rows with constant b; the cluster sets are single points.
std::map<std::string, CatalogEntry> build() {
  std::map<std::string, CatalogEntry> out;
  auto put = [&](CatalogEntry e) { out[e.name] = std::move(e); };

  {
    CatalogEntry e;
    e.name = "unknot";
    e.dplus = QuasiPoly::polynomial(0, R(1, 2), R(-1, 2));
    e.dminus = QuasiPoly::polynomial(0, R(-1, 2), R(1, 2));
    e.js = {0};
    e.js_star = {0};
    e.jx = {1};
    e.jx_star = {-1};
    e.b_fn = {R(1, 2)};
    e.b_star_fn = {R(-1, 2)};
    e.bs_known = {0};
    e.surfaces = {SurfaceData(0, 1, 1)};
    e.mirror_surfaces = {SurfaceData(0, 1, 1)};
    e.flags.A_adequate = e.flags.B_adequate = e.flags.trivial = true;
    e.braid = BraidWord(1, {});
    e.note = "trivial knot; the disk is the essential surface";
    put(e);
  }
  {
    CatalogEntry e = slope_row("3_1", 6, 0, 0, R(1, 2));
    e.braid = BraidWord(2, {1, 1, 1});
    auto s = adequate_summary(*e.braid);
    e.dplus = adequate_dplus(s);
    e.dminus = adequate_dminus(s);
    e.surfaces = {adequate_surface(s, StateSide::B)};
    e.mirror_surfaces = {adequate_surface(s, StateSide::A)};
    e.flags.A_adequate = e.flags.B_adequate = e.flags.torus = true;
    e.note = "T(2,3), standard closed 2-braid diagram";
    put(e);
  }
  {
    CatalogEntry e = slope_row("4_1", 4, -4, R(-1, 2), R(1, 2));
    e.braid = BraidWord(3, {1, -2, 1, -2});
    auto s = adequate_summary(*e.braid);
    e.dplus = adequate_dplus(s);
    e.dminus = adequate_dminus(s);
    e.surfaces = {adequate_surface(s, StateSide::B)};
    e.mirror_surfaces = {adequate_surface(s, StateSide::A)};
    e.flags.A_adequate = e.flags.B_adequate = true;
    e.note = "figure-eight knot, alternating 3-braid diagram";
    put(e);
  }

  // Non-alternating knots up to nine crossings. Slopes, 2b clusters and surface
  // data (chi, number of boundary components) as published; d_+ formulas where known.
  {
    CatalogEntry e = slope_row("8_19", 12, 0, 0, R(5, 2));
    add_surfaces(e, 0, 2, -5, 1);
    e.dplus = two_periodic(3, 0, R(-7, 2), -3);  // 3n^2 - (13 + (-1)^n)/4
    e.dminus = QuasiPoly::polynomial(0, R(5, 2), R(-5, 2));
    e.flags.torus = true;
    e.flags.A_adequate = true;
    e.braid = BraidWord(3, {1, 2, 1, 2, 1, 2, 1, 2});
    e.note = "T(3,4)";
    put(e);
  }
  {
    CatalogEntry e;
    e.name = "8_20";
    fill_from_model(e, three_periodic(R(2, 3), R(-1, 2), R(-1, 6), R(-5, 6), R(-1, 2)));
    e.js_star = {-10};
    e.jx_star = {4};
    e.b_star_fn = {2};
    e.bs_known = e.js.union_with(e.js_star);
    add_surfaces(e, -3, 1, -4, 1);
    put(e);
  }
  {
    CatalogEntry e = slope_row("8_21", 1, -12, -1, R(3, 2));
    add_surfaces(e, -4, 2, -3, 1);
    // derived from bracket evaluation of the braid below at n = 1..4
    e.dplus = two_periodic(R(1, 4), -1, R(1, 2), R(3, 4));
    e.dminus = QuasiPoly::polynomial(-3, R(3, 2), R(3, 2));
    e.braid = BraidWord(3, {-2, -2, -1, -1, -1, -2, 1, 1});
    e.note = "d_+ and d_- fitted from colored Jones polynomials of the stored braid";
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_42", 6, -8, R(-1, 2), R(5, 2));
    add_surfaces(e, -2, 2, -5, 1);
    put(e);
  }
  {
    CatalogEntry e;
    e.name = "9_43";
    fill_from_model(e, three_periodic(R(8, 3), R(-1, 2), R(-13, 6), R(-5, 6), R(-7, 2)));
    e.js_star = {-4};
    e.jx_star = {5};
    e.b_star_fn = {R(5, 2)};
    e.bs_known = e.js.union_with(e.js_star);
    add_surfaces(e, -3, 1, -5, 1);
    put(e);
  }
  {
    CatalogEntry e;
    e.name = "9_44";
    fill_from_model(e, three_periodic(R(7, 6), -1, R(-1, 6), R(-4, 3), R(-1, 2)));
    e.js_star = {-10};
    e.jx_star = {4};
    e.b_star_fn = {2};
    e.bs_known = e.js.union_with(e.js_star);
    add_surfaces(e, -6, 1, -4, 1);
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_45", 1, -14, -1, 2);
    add_surfaces(e, -4, 2, -4, 1);
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_46", 2, -12, R(-1, 2), R(5, 2));
    add_surfaces(e, -2, 2, -5, 1);
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_47", 9, -6, -1, 2);
    e.note = "no surface data on file";
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_48", 11, -4, R(-3, 2), R(3, 2));
    add_surfaces(e, -6, 2, -3, 1);
    put(e);
  }
  {
    CatalogEntry e = slope_row("9_49", 15, 0, R(-3, 2), R(3, 2));
    // genus two Seifert surface on the mirror side
    e.mirror_surfaces = {SurfaceData(0, -3, 1)};
    e.dplus = two_periodic(R(15, 4), R(-3, 2), R(-5, 2), R(-9, 4));
    e.dminus = QuasiPoly::polynomial(0, R(3, 2), R(-3, 2));
    e.flags.A_adequate = true;
    e.braid = BraidWord(4, {-3, 2, -1, 2, 3, 3, 1, 1, 2, 1, 1});
    e.note = "d_+ constants fitted from colored Jones polynomials of the stored braid";
    put(e);
  }
  return out;
}

const std::map<std::string, CatalogEntry>& table() {
  static const std::map<std::string, CatalogEntry> t = build();
  return t;
}

}  // namespace

CatalogEntry pretzel_entry(long p) {
  if (p % 2 == 0) throw ParameterError("pretzel(-2,3,p) needs odd p");
  if (p == 1 || p == 3 || p == 5) throw ParameterError("pretzel(-2,3," + std::to_string(p) + ") is a torus knot");
  CatalogEntry e;
  e.name = "pretzel(-2,3," + std::to_string(p) + ")";
  if (p > 5) {
    // K(m,1) with p = 2m + 3
    long m = (p - 3) / 2;
    fill_from_model(e, dplus_model(FusionParams(m, 1)));
    Rat slope(2 * (p * p - p - 5), p - 3);
    e.bs_known = {slope};
    e.surfaces = {SurfaceData(slope, -(p - 5), 2)};
    e.flags.A_adequate = true;
    e.note = "2-fusion knot K(" + std::to_string(m) + ",1)";
  } else {
    Rat slope(2 * (p + 1) * (p + 1), p);
    e.js_star = {slope};
    e.jx_star = {1, Rat(1) - Rat(2, p)};
    e.b_star_fn.assign(static_cast<size_t>(-p), Rat(1, 2));
    e.b_star_fn[0] = Rat(1, 2) - Rat(1, p);
    e.bs_known = {slope};
    e.mirror_surfaces = {SurfaceData(slope, p, 1)};
    e.flags.B_adequate = true;
    e.note = "boundary count of the mirror-side surface taken as 1";
  }
  return e;
}

CatalogEntry catalog(const std::string& name) {
  static const std::regex pretzel(R"(\s*pretzel\(\s*-2\s*,\s*3\s*,\s*(-?\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(name, m, pretzel)) return pretzel_entry(std::stol(m[1]));
  auto it = table().find(name);
  if (it == table().end()) throw ParseError("unknown catalog knot '" + name + "'");
  return it->second;
}

std::vector<std::string> catalog_names(const std::string& group) {
  std::vector<std::string> period2 = {"8_19", "8_21", "9_42", "9_45", "9_46", "9_47", "9_48", "9_49"};
  std::vector<std::string> montesinos = {"8_19", "8_20", "8_21", "9_42", "9_43", "9_44", "9_45", "9_46", "9_48"};
  if (group == "period2") return period2;
  if (group == "montesinos") return montesinos;
  if (group == "all") {
    std::vector<std::string> out = period2;
    for (const auto& n : montesinos)
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
  }
  if (group == "pretzel") return {"pretzel(-2,3,7)", "pretzel(-2,3,9)", "pretzel(-2,3,11)"};
  throw ParseError("unknown catalog group '" + group + "'");
}

namespace {

// d_+ model of the base from its stored model or its single-valued slope data;
// the constant term does not influence the cable's A and B.
QuasiPoly plus_model_of(const std::optional<QuasiPoly>& model, const SlopeSet& js, const SlopeSet& jx,
                        const std::string& name) {
  if (model) return *model;
  if (js.size() != 1 || jx.size() != 1 || js.has_infinity())
    throw DomainError("no degree model on file for " + name + " and its slope data is not single-valued");
  return QuasiPoly::polynomial(*js.finite().begin() / Rat(4), *jx.finite().begin() / Rat(2), 0);
}

std::vector<SurfaceData> transformed(const std::vector<SurfaceData>& surfaces, CableParams params) {
  std::vector<SurfaceData> out;
  for (const auto& s : surfaces)
    if (s.slope.is_integer()) out.push_back(cable_surface(s, params));
  out.emplace_back(Rat(params.p() * params.q()), 0, 2);  // cabling annulus
  return out;
}

}  // namespace

CatalogEntry cable_entry(const CatalogEntry& base, CableParams params) {
  CableParams c = params.normalized();
  CableParams mirrored(-c.p(), c.q());
  QuasiPoly dplus, dminus;
  if (base.flags.trivial) {
    dplus = torus_degree(c.p(), c.q());
    dminus = mirror_model(torus_degree(mirrored.p(), mirrored.q()));
  } else {
    QuasiPoly plus = plus_model_of(base.dplus, base.js, base.jx, base.name);
    std::optional<QuasiPoly> star_model;
    if (base.dminus) star_model = mirror_model(*base.dminus);
    QuasiPoly star = plus_model_of(star_model, base.js_star.negated(), base.jx_star.negated(), base.name + "*");
    dplus = cable_degree_model(plus, c);
    dminus = mirror_model(cable_degree_model(star, mirrored));
  }
  CatalogEntry e;
  e.name = "cable(" + base.name + ";" + std::to_string(params.p()) + "," + std::to_string(params.q()) + ")";
  e.dplus = dplus;
  e.dminus = dminus;
  e.js = jones_slopes(dplus);
  e.jx = jx_set(dplus);
  e.js_star = jones_slopes(dminus);
  e.jx_star = jx_set(dminus);
  for (const auto& r : dplus.coeffs()) e.b_fn.push_back(r.b);
  for (const auto& r : dminus.coeffs()) e.b_star_fn.push_back(r.b);
  e.bs_known = cable_boundary_slopes(base.bs_known, c);
  e.surfaces = transformed(base.surfaces, c);
  e.mirror_surfaces = transformed(base.mirror_surfaces, c);
  bool unknotted = base.flags.trivial && std::labs(c.p()) == 1;
  e.flags.trivial = unknotted;
  e.flags.torus = base.flags.trivial && !unknotted;
  e.flags.cable = !base.flags.trivial;
  return e;
}

}  // namespace cj
