#pragma once

#include <map>
#include <string>
#include <vector>

#include "cablejones/errors.hpp"
#include "cablejones/rational.hpp"
#include "cablejones/slope_set.hpp"

namespace cj {

struct Residue {
  Rat a, b, d;
  bool operator==(const Residue&) const = default;
};

// value(n) = a n^2 + b n + d with (a,b,d) chosen by n mod period, for n >= valid_from.
class QuasiPoly {
 public:
  QuasiPoly() : coeffs_{Residue{}} {}
  // coeffs[i] applies to n = i (mod coeffs.size()); the period is reduced to the minimal one.
  explicit QuasiPoly(std::vector<Residue> coeffs, long valid_from = 1);
  static QuasiPoly polynomial(const Rat& a, const Rat& b, const Rat& d, long valid_from = 1);

  int period() const { return static_cast<int>(coeffs_.size()); }
  long valid_from() const { return valid_from_; }
  const std::vector<Residue>& coeffs() const { return coeffs_; }
  const Residue& residue_for(long n) const;

  Rat eval(long n) const;
  // Evaluates the periodic formula even below valid_from.
  Rat eval_unchecked(long n) const;

  bool constant_a() const;
  QuasiPoly with_valid_from(long n) const { return QuasiPoly(coeffs_, n); }

  std::string str() const;
  bool operator==(const QuasiPoly&) const = default;

 private:
  std::vector<Residue> coeffs_;
  long valid_from_ = 1;
};

class FitError : public DomainError {
 public:
  FitError(const std::string& what, long first_inconsistent)
      : DomainError(what), first_inconsistent_(first_inconsistent) {}
  long first_inconsistent() const { return first_inconsistent_; }

 private:
  long first_inconsistent_;
};

// Quasi-polynomial through consecutive samples: the earliest valid_from any period
// up to pi_max achieves, then the smallest such period. Each residue class must keep
// at least five samples from valid_from on.
QuasiPoly fit(const std::map<long, Rat>& samples, int pi_max = 12);

SlopeSet jones_slopes(const QuasiPoly& q);  // {4 a_i}
SlopeSet jx_set(const QuasiPoly& q);        // {2 b_i}
QuasiPoly mirror_model(const QuasiPoly& q);  // all coefficients negated

}  // namespace cj
