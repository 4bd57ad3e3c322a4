#include "cablejones/rational.hpp"

#include <numeric>
#include <ostream>

#include "cablejones/errors.hpp"

namespace cj {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string t) {
    size_t a = t.find_first_not_of(" \t");
    size_t b = t.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
  };
  s = trim(s);
  if (s.empty()) throw ParseError("empty rational");
  auto parse_int = [&](const std::string& t) {
    std::string u = trim(t);
    size_t start = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
    if (u.size() == start) throw ParseError("bad rational '" + s + "'");
    for (size_t i = start; i < u.size(); ++i)
      if (u[i] < '0' || u[i] > '9') throw ParseError("bad rational '" + s + "'");
    if (u[0] == '+') u = u.substr(1);
    return Int(u);
  };
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rat(parse_int(s.substr(0, slash)), den);
}

bool Rat::is_half_integer() const { return q_.get_den() == 2; }

Int Rat::floor() const {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Int Rat::ceil() const {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

long Rat::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p())
    throw DomainError("rational " + str() + " is not a machine integer");
  return q_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.q_ == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

long lcm_long(long a, long b) { return std::lcm(a, b); }

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace cj
