#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cablejones/errors.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/quasipoly.hpp"
#include "cablejones/slope_set.hpp"
#include "cablejones/surface.hpp"

namespace cj {

// Cable parameters with gcd(p,q) = 1 and |q| > 1.
class CableParams {
 public:
  CableParams(long p, long q);
  long p() const { return p_; }
  long q() const { return q_; }
  // (-p,-q) when q < 0; the cable is the same knot with reversed orientation.
  CableParams normalized() const;
  Rat ratio() const { return Rat(p_, q_); }
  std::string str() const { return "(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }
  bool operator==(const CableParams&) const = default;

 private:
  long p_, q_;
};

// k = twok / 2.
struct HalfIndex {
  long twok = 0;
  Rat k() const { return Rat(twok, 2); }
  bool operator==(const HalfIndex&) const = default;
};

// All k with |k| <= (n-1)/2 and k integral (n odd) or half-integral (n even).
std::vector<HalfIndex> s_n(long n);

using JonesSource = std::function<QLaurent(long color)>;

// Caches colors already computed; safe to call from several threads.
JonesSource memoize(JonesSource jk);

// v^(pq(n^2-1)/4) * sum over k in S_n of v^(-pk(qk+1)) J(2qk+1), with J(-m) = -J(m).
QLaurent cable_jones(const JonesSource& jk, CableParams params, long n);

// Highest-degree lookup for a base knot: exact values for small colors, the model otherwise.
class DegreeTable {
 public:
  DegreeTable(QuasiPoly model, std::map<long, Rat> exact = {});  // NOLINT(google-explicit-constructor)
  Rat dplus(long color) const;
  const QuasiPoly& model() const { return model_; }
  const std::map<long, Rat>& exact() const { return exact_; }

 private:
  QuasiPoly model_;
  std::map<long, Rat> exact_;
};

// -p k (q k + 1) + d_+[J(|2qk+1|)]; the color 0 term vanishes and is rejected.
Rat term_degree_f(const DegreeTable& base, CableParams params, HalfIndex k);

enum class CableBranch { inherited, annulus, collision };
std::string to_string(CableBranch b);

struct MaximizerStep {
  long n = 0;
  HalfIndex winner;
  Rat max;
  std::optional<Rat> margin;  // max minus the runner-up; absent for a single term
};

struct CablePrediction {
  QuasiPoly model;
  CableParams params{1, 2};
  std::vector<CableBranch> residue_branch;  // per residue of the model
  std::string subcase;
  std::vector<MaximizerStep> trace;
  long tied_below = 0;  // colors up to this one were skipped for tied maximizers
};

class CancellationRisk : public HypothesisError {
 public:
  CancellationRisk(long n, std::vector<HalfIndex> tied);
  long n() const { return n_; }
  const std::vector<HalfIndex>& tied() const { return tied_; }

 private:
  long n_;
  std::vector<HalfIndex> tied_;
};

// Brute-force maximization of f over S_n for n in [n_lo, n_hi], then a fit.
CablePrediction predict_cable_degree(const DegreeTable& base, CableParams params, long n_lo, long n_hi,
                                     int pi_max = 12);

// Runs run(lo) for lo = n_lo, then again from one past each color that raised
// CancellationRisk; records the colors skipped in tied_below.
CablePrediction past_ties(const std::function<CablePrediction(long lo)>& run, long n_lo, long n_hi);
// predict_cable_degree through past_ties.
CablePrediction predict_cable_degree_untied(const DegreeTable& base, CableParams params, long n_lo, long n_hi,
                                            int pi_max = 12);

// Explicit A(n), B(n), D(n) for bases of period at most two.
CablePrediction closed_form_period2(const QuasiPoly& base, CableParams params);

// Piecewise maximization with one quadratic per (sign of k, residue of the color),
// each maximized at an end of its piece, for bases with constant a.
CablePrediction quasi_constant_prediction(const QuasiPoly& base, CableParams params, long n_lo, long n_hi,
                                          int pi_max = 12);

// d_+ model of the cable: the period-2 closed form when it applies, otherwise a
// maximizer search over a range scaled to the base period and |q|.
QuasiPoly cable_degree_model(const QuasiPoly& base, CableParams params);

struct Thresholds {
  Rat m1, m2;
};

Thresholds m1_m2(const QuasiPoly& base);
bool admissible_constant_a(const QuasiPoly& base, CableParams params);

SlopeSet cable_boundary_slopes(const SlopeSet& bs, CableParams params);
SurfaceData cable_surface(const SurfaceData& s, CableParams params);

// 2B of the cable from the base's constant a and b: 0 on the annulus branch,
// 2|q|b + (1-|q|)|4aq-p| on the inherited branch.
Rat cable_two_b(const Rat& a, const Rat& b, CableParams params);

}  // namespace cj
