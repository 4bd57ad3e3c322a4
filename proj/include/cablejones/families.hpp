#pragma once

#include <utility>

#include "cablejones/braid.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/pd_code.hpp"
#include "cablejones/quasipoly.hpp"
#include "cablejones/surface.hpp"

namespace cj {

// [m] = (v^(m/2) - v^(-m/2)) / (v^(1/2) - v^(-1/2)); [-m] = -[m].
QLaurent quantum_integer(long m);

// Colored Jones polynomial of the unknot, [n].
QLaurent unknot_jones(long n);

// Colored Jones polynomial of the (p,q) torus knot as a cable of the unknot.
// |p| = 1 or |q| = 1 gives the unknot.
QLaurent torus_jones(long p, long q, long n);

// Degree model d_+ of the torus knot T(p,q).
QuasiPoly torus_degree(long p, long q);

// d_+(n) = delta(n-1) + (n-1)/2 as a model in n.
QuasiPoly delta_to_dplus(const QuasiPoly& delta);

struct StateGraphSummary {
  int v_A = 0, v_B = 0;
  int c = 0, c_plus = 0, c_minus = 0;
  bool is_A_adequate = false, is_B_adequate = false;
};

StateGraphSummary adequate_summary(const PDCode& d);
StateGraphSummary adequate_summary(const BraidWord& b);

enum class StateSide { A, B };

// Exact degree models; throw HypothesisError when the adequacy flag is missing.
QuasiPoly adequate_dplus(const StateGraphSummary& s);
QuasiPoly adequate_dminus(const StateGraphSummary& s);
std::pair<QuasiPoly, QuasiPoly> adequate_degrees(const StateGraphSummary& s);

// State surface S_A (slope -2c_-, chi = v_A - c) or S_B (slope 2c_+, chi = v_B - c).
SurfaceData adequate_surface(const StateGraphSummary& s, StateSide side);

}  // namespace cj
