#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "cablejones/bracket.hpp"
#include "cablejones/cabling.hpp"
#include "cablejones/catalog.hpp"
#include "cablejones/fusion.hpp"

namespace cj {

class KnotPresentation;

struct TorusSpec {
  long p = 2, q = 3;
};

struct CableSpec {
  std::shared_ptr<const KnotPresentation> base;
  CableParams params{1, 2};
};

struct CatalogRef {
  std::string name;
};

// torus:p,q | braid:<word> | pd:<json> | cable:<base>;p,q | fusion:m1,m2 | catalog:<name>
class KnotPresentation {
 public:
  using Variant = std::variant<BraidWord, PDCode, TorusSpec, CableSpec, FusionParams, CatalogRef>;

  explicit KnotPresentation(Variant v) : v_(std::move(v)) {}
  static KnotPresentation parse(std::string_view text);

  const Variant& value() const { return v_; }
  std::string str() const;

 private:
  Variant v_;
};

// Colored Jones polynomial of the presented knot. Fusion knots have no diagram
// here; catalog knots need a stored braid.
QLaurent presentation_jones(const KnotPresentation& k, long n, const EvaluatorBudget& budget = {});

// Memoized source of colored Jones polynomials.
JonesSource jones_source(const KnotPresentation& k, const EvaluatorBudget& budget = {});

// Exact d_+ model when one is available without sampling: torus and fusion
// formulas, catalog formulas, B-adequate diagrams and cables of these.
QuasiPoly degree_model(const KnotPresentation& k);

// The same for d_-; mirror duality on the presentations where it is simpler.
QuasiPoly degree_model_minus(const KnotPresentation& k);

// Jones source assembled from a degree model: v^d_+(m) + v^d_-(m) (or 1 when
// these agree). Only the extreme degrees of cables built on it are meaningful.
JonesSource model_jones_source(const QuasiPoly& dplus, const QuasiPoly& dminus);

}  // namespace cj
