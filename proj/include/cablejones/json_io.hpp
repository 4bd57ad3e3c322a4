#pragma once
#include <json.hpp>
#include <map>
#include <string>

#include "cablejones/cabling.hpp"
#include "cablejones/catalog.hpp"
#include "cablejones/checker.hpp"
#include "cablejones/fusion.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/quasipoly.hpp"

namespace cj::io {

// Insertion-ordered so that identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings "a" or "a/b".
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// [[exponent_quarters, "coefficient"], ...] sorted by exponent.
Json to_json(const QLaurent& f);
QLaurent laurent_from_json(const Json& j);

// {period, valid_from, coeffs: [[a, b, d], ...]}
Json to_json(const QuasiPoly& q);
QuasiPoly quasipoly_from_json(const Json& j);

// ["-5/3", "-1", "inf"]
Json to_json(const SlopeSet& s);
Json to_json(const SurfaceData& s);
Json to_json(const CableParams& c);
Json to_json(const CablePrediction& p);
Json to_json(const CatalogEntry& e);
Json to_json(const DeltaValue& d);
Json to_json(const CheckResult& c);
// {knot, checks: [{conjecture, side, status, details}]}
Json to_json(const ConjectureReport& r);

// Degree samples: an object {"n": "value"} or a list of [n, "value"] pairs.
std::map<long, Rat> samples_from_json(const Json& j);

}  // namespace cj::io
