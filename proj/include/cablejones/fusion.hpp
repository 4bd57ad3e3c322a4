#pragma once

#include <string>
#include <utility>

#include "cablejones/errors.hpp"
#include "cablejones/quasipoly.hpp"
#include "cablejones/rational.hpp"

namespace cj {

// 2-fusion knot K(m1, m2) with m2 not in {-1, 0}.
class FusionParams {
 public:
  FusionParams(long m1, long m2);
  long m1() const { return m1_; }
  long m2() const { return m2_; }
  std::string str() const { return "K(" + std::to_string(m1_) + "," + std::to_string(m2_) + ")"; }

 private:
  long m1_, m2_;
};

struct LatticePoint {
  long k1 = 0, k2 = 0;
  bool operator==(const LatticePoint&) const = default;
};

// 0 <= k1 <= n and |n - 2k1| <= n + 2k2 <= n + 2k1
bool admissible(long n, LatticePoint pt);

Rat q_value(const FusionParams& fp, long n, LatticePoint pt);

enum class FusionCase { A, B1, B2, C1, C2 };
std::string to_string(FusionCase c);
FusionCase fusion_case(const FusionParams& fp);

struct DeltaValue {
  Rat value;
  LatticePoint point;
  FusionCase which = FusionCase::A;
  Rat correction;  // subtracted from Q in the C-2 half-integer subcase, else 0
};

// Case formula for delta_K(n) at the integer closest to c_i, clamped to the case's range.
DeltaValue delta_detail(const FusionParams& fp, long n);
Rat delta(const FusionParams& fp, long n);

// Exhaustive maximum of Q over admissible points; ties keep the first point in (k1, k2) order.
std::pair<Rat, LatticePoint> delta_bruteforce(const FusionParams& fp, long n, long max_n = 2000);

// d_+ as a quasi-polynomial in n, from the per-case closed forms.
QuasiPoly dplus_model(const FusionParams& fp);

// The linear coefficient of d_+ for colors n of the given value (any representative of the residue).
Rat b_coefficient(const FusionParams& fp, long n);

// Whether b vanishes by the zero classification: m1 in {0,1} and m2 >= 1, or (m1,m2) = (-1,1).
bool b_vanishes(const FusionParams& fp);

}  // namespace cj
