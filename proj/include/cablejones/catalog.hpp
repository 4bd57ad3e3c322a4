#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cablejones/braid.hpp"
#include "cablejones/cabling.hpp"
#include "cablejones/quasipoly.hpp"
#include "cablejones/slope_set.hpp"
#include "cablejones/surface.hpp"

namespace cj {

struct KnotFlags {
  bool A_adequate = false, B_adequate = false;
  bool torus = false, cable = false, composite = false;
  bool trivial = false;
};

struct CatalogEntry {
  std::string name;
  SlopeSet js, js_star;  // Jones slopes 4a and 4a* of the d_+ and d_- sides
  SlopeSet jx, jx_star;  // cluster sets of 2b and 2b*
  std::vector<Rat> b_fn, b_star_fn;  // per residue, index = n mod size
  SlopeSet bs_known;  // boundary slopes asserted so far; partial
  std::vector<SurfaceData> surfaces, mirror_surfaces;
  KnotFlags flags;
  std::optional<QuasiPoly> dplus, dminus;
  std::optional<BraidWord> braid;  // a diagram of this chirality, when one is on file
  std::string note;
};

// Names: "unknot", "3_1", "4_1", the non-alternating knots 8_19 ... 9_49 and
// "pretzel(-2,3,p)" for odd p outside {1,3,5}.
CatalogEntry catalog(const std::string& name);

// "period2" (8_19, 8_21, 9_42, 9_45, 9_46, 9_47, 9_48, 9_49), "montesinos"
// (8_19, 8_20, 8_21, 9_42, 9_43, 9_44, 9_45, 9_46, 9_48) or "all" (the union).
std::vector<std::string> catalog_names(const std::string& group = "all");

CatalogEntry pretzel_entry(long p);
// The (p,q)-cable of a catalog knot: degree models through the cabling predictor
// (the d_- side via the mirror (K_{p,q})* = (K*)_{-p,q}), boundary slopes
// q^2 bs + {pq}, surfaces of integral slope transformed and the cabling annulus added.
// Bases without stored models need single-valued js and jx on each side.
CatalogEntry cable_entry(const CatalogEntry& base, CableParams params);

}  // namespace cj
