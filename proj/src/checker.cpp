#include "cablejones/checker.hpp"

#include <algorithm>

namespace cj {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_confirmed:
      return "not_confirmed";
    case Status::inapplicable:
      return "inapplicable";
    case Status::unresolved:
      return "unresolved";
  }
  return "?";
}

bool ConjectureReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

namespace {

// fail > unresolved > not_confirmed > pass; all inapplicable stays inapplicable
Status combine(const std::vector<Verdict>& vs) {
  auto any = [&](Status s) {
    return std::any_of(vs.begin(), vs.end(), [s](const Verdict& v) { return v.status == s; });
  };
  if (any(Status::fail)) return Status::fail;
  if (any(Status::unresolved)) return Status::unresolved;
  if (any(Status::not_confirmed)) return Status::not_confirmed;
  if (!any(Status::pass)) return Status::inapplicable;
  if (any(Status::inapplicable)) return Status::not_confirmed;
  return Status::pass;
}

}  // namespace

CheckResult check_slope(const SlopeSet& js, const SlopeSet& js_star, const SlopeSet& bs, bool bs_complete) {
  CheckResult r;
  r.conjecture = "slope";
  SlopeSet all = js.union_with(js_star);
  for (const auto& s : all.finite()) {
    Verdict v{s.str(), Status::pass, "in bs"};
    if (!bs.contains(s)) {
      v.status = bs_complete ? Status::fail : Status::not_confirmed;
      v.detail = bs_complete ? "witness: not a boundary slope" : "not among the known boundary slopes";
    }
    r.verdicts.push_back(v);
  }
  r.status = combine(r.verdicts);
  return r;
}

CheckResult check_strong_slope(const SlopeSet& js, const SlopeSet& jx, const std::vector<SurfaceData>& surfaces) {
  CheckResult r;
  r.conjecture = "strong_slope";
  r.side = "+";
  for (const auto& s : js.finite()) {
    Verdict v{s.str(), Status::inapplicable, "no surface with this slope on file"};
    Rat den(s.den());
    std::string ratios;
    for (const auto& surf : surfaces) {
      if (surf.slope != s) continue;
      Rat ratio = Rat(surf.euler) / (Rat(surf.boundary_count) * den);
      ratios += (ratios.empty() ? "" : ", ") + ratio.str();
      if (jx.contains(ratio)) {
        v.status = Status::pass;
        v.detail = "chi/(|dS| b) = " + ratio.str() + " in jx";
        break;
      }
      v.status = Status::fail;
    }
    if (v.status == Status::fail) v.detail = "chi/(|dS| b) = " + ratios + " not in jx " + jx.str();
    r.verdicts.push_back(v);
  }
  r.status = combine(r.verdicts);
  return r;
}

CheckResult check_strong_slope_mirror(const SlopeSet& js_star, const SlopeSet& jx_star,
                                      const std::vector<SurfaceData>& surfaces) {
  std::vector<SurfaceData> flipped;
  for (const auto& s : surfaces) flipped.emplace_back(-s.slope, s.euler, s.boundary_count);
  CheckResult r = check_strong_slope(js_star.negated(), jx_star.negated(), flipped);
  r.side = "-";
  // report in the original orientation
  for (auto& v : r.verdicts) v.subject = (-Rat::parse(v.subject)).str();
  return r;
}

CheckResult check_b_nonpositive(const std::vector<Rat>& b_values, const KnotFlags& flags) {
  CheckResult r;
  r.conjecture = "b_nonpositive";
  r.side = "+";
  if (flags.trivial) {
    r.verdicts.push_back({"b", Status::inapplicable, "trivial knot, b = 1/2"});
    r.status = Status::inapplicable;
    return r;
  }
  bool annulus = flags.torus || flags.cable || flags.composite;
  std::vector<Rat> seen;
  for (const auto& b : b_values) {
    if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
    seen.push_back(b);
    Verdict v{b.str(), Status::pass, "b < 0"};
    if (b.sign() > 0) {
      v.status = Status::fail;
      v.detail = "b > 0";
    } else if (b.sign() == 0) {
      v.status = annulus ? Status::pass : Status::unresolved;
      v.detail = annulus ? "b = 0 for a torus, cable or composite knot" : "b = 0 without a known essential annulus";
    }
    r.verdicts.push_back(v);
  }
  r.status = combine(r.verdicts);
  return r;
}

CheckResult check_b_nonpositive(const QuasiPoly& model, const KnotFlags& flags) {
  std::vector<Rat> bs;
  for (const auto& c : model.coeffs()) bs.push_back(c.b);
  return check_b_nonpositive(bs, flags);
}

ConjectureReport check_entry(const CatalogEntry& e) {
  ConjectureReport rep;
  rep.knot = e.name;
  rep.checks.push_back(check_slope(e.js, e.js_star, e.bs_known));
  rep.checks.push_back(check_strong_slope(e.js, e.jx, e.surfaces));
  rep.checks.push_back(check_strong_slope_mirror(e.js_star, e.jx_star, e.mirror_surfaces));
  if (e.dplus)
    rep.checks.push_back(check_b_nonpositive(*e.dplus, e.flags));
  else if (!e.b_fn.empty())
    rep.checks.push_back(check_b_nonpositive(e.b_fn, e.flags));
  return rep;
}

}  // namespace cj
