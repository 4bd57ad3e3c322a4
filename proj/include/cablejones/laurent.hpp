#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cablejones/rational.hpp"

namespace cj {

// Laurent polynomial in v with exponents in units of v^(1/4).
// Terms are kept sorted by exponent with no zero coefficients.
class QLaurent {
 public:
  struct Term {
    long e;
    Int c;
    bool operator==(const Term& o) const { return e == o.e && c == o.c; }
  };

  QLaurent() = default;
  static QLaurent monomial(long quarter_exp, const Int& c = 1);
  static QLaurent constant(const Int& c) { return monomial(0, c); }
  static QLaurent one() { return constant(1); }
  // v^e for a rational e with 4e integral.
  static QLaurent v_power(const Rat& e, const Int& c = 1);
  // Loop value -(v^(1/2) + v^(-1/2)).
  static QLaurent loop_value();
  // Sorts, merges equal exponents and drops zeros.
  static QLaurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  Int coeff(long quarter_exp) const;

  long max_quarter() const;
  long min_quarter() const;
  // (dmax, dmin) in units of v.
  std::pair<Rat, Rat> degrees() const;

  QLaurent mirror() const;
  QLaurent shifted(long quarters) const;
  QLaurent scaled(const Int& c) const;
  QLaurent pow(unsigned k) const;

  QLaurent operator-() const { return scaled(-1); }
  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  // Human readable, highest degree first, e.g. "-v^(9/2) + v^(5/2) + 1".
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// Dense scratch buffer for summing many shifted polynomials.
class LaurentAccumulator {
 public:
  void add(const QLaurent& f, long shift = 0);
  void add_scaled(const QLaurent& f, long shift, const Int& scale);
  void add_term(long quarter_exp, const Int& c);
  QLaurent take();

 private:
  void reserve_range(long lo, long hi);
  std::vector<Int> buf_;
  long offset_ = 0;  // exponent of buf_[0]
};

}  // namespace cj
