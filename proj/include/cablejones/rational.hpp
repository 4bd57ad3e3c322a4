#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace cj {

using Int = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "a" or "a/b" with optional sign.
  static Rat parse(std::string_view text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_half_integer() const;  // in 1/2 + Z
  int sign() const { return sgn(q_); }
  Int floor() const;
  Int ceil() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  // Exact conversion; throws DomainError when not an integer fitting in long.
  long to_long() const;

  std::string str() const { return q_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Int gcd(const Int& a, const Int& b);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
// Mathematical modulus in [0, m).
long mod_floor(long a, long m);

}  // namespace cj
