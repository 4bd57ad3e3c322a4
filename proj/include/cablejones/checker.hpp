#pragma once

#include <string>
#include <vector>

#include "cablejones/catalog.hpp"
#include "cablejones/quasipoly.hpp"
#include "cablejones/slope_set.hpp"
#include "cablejones/surface.hpp"

namespace cj {

enum class Status { pass, fail, not_confirmed, inapplicable, unresolved };
std::string to_string(Status s);

// Verdict for one Jones slope (or one b value) inside a check.
struct Verdict {
  std::string subject;
  Status status = Status::pass;
  std::string detail;
};

struct CheckResult {
  std::string conjecture;  // slope | strong_slope | b_nonpositive
  std::string side;        // "+" for d_+ data, "-" for d_- data, empty when both
  Status status = Status::inapplicable;
  std::vector<Verdict> verdicts;
};

struct ConjectureReport {
  std::string knot;
  std::vector<CheckResult> checks;
  // false when any check failed
  bool ok() const;
};

// js and js* inside bs. Missing slopes fail only when bs is known to be complete.
CheckResult check_slope(const SlopeSet& js, const SlopeSet& js_star, const SlopeSet& bs, bool bs_complete = false);

// For each a/b in js (b > 0, reduced), some surface of slope a/b has chi/(|dS| b) in jx.
CheckResult check_strong_slope(const SlopeSet& js, const SlopeSet& jx, const std::vector<SurfaceData>& surfaces);

// The same test on d_- data, read through the mirror image: slopes, jx and surface
// slopes change sign.
CheckResult check_strong_slope_mirror(const SlopeSet& js_star, const SlopeSet& jx_star,
                                      const std::vector<SurfaceData>& surfaces);

// b <= 0 everywhere; b = 0 somewhere passes only for torus, cable or composite knots.
CheckResult check_b_nonpositive(const std::vector<Rat>& b_values, const KnotFlags& flags);
CheckResult check_b_nonpositive(const QuasiPoly& model, const KnotFlags& flags);

ConjectureReport check_entry(const CatalogEntry& e);

}  // namespace cj
