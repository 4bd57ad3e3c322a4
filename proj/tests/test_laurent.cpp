#include <doctest.h>

#include <random>

#include "cablejones/errors.hpp"
#include "cablejones/laurent.hpp"
#include "cablejones/rational.hpp"

using namespace cj;

namespace {

// v^(e/4) written with quarter exponents
QLaurent m(long quarters, long c = 1) { return QLaurent::monomial(quarters, c); }

QLaurent random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 5), exp(-12, 12), coeff(-4, 4);
  std::vector<QLaurent::Term> terms;
  for (int i = count(rng); i > 0; --i) terms.push_back({exp(rng), coeff(rng)});
  return QLaurent::from_terms(terms);
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  Rat r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat(0, 5).den() == 1);
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS_AS(Rat(1, 0), DomainError);
  CHECK_THROWS_AS(Rat::parse("1/x"), ParseError);
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(5, 2).is_half_integer());
  CHECK_FALSE(Rat(5, 3).is_half_integer());
  CHECK(mod_floor(-7, 3) == 2);
}

TEST_CASE("add") {
  QLaurent s = m(2) + m(-2);
  CHECK(s + (-m(-2)) == m(2));
  CHECK(s + QLaurent() == s);
  CHECK((m(4) + m(0)) + (m(4) - m(0)) == m(4, 2));
}

TEST_CASE("mul") {
  CHECK((m(2) - m(-2)) * (m(2) + m(-2)) == m(4) - m(-4));
  QLaurent f = m(3, 5) + m(-7, -2);
  CHECK(f * QLaurent::one() == f);
  QLaurent delta = QLaurent::loop_value();
  CHECK(delta == -(m(2) + m(-2)));
  CHECK(delta * delta == m(4) + m(0, 2) + m(-4));
}

TEST_CASE("degrees") {
  auto [hi, lo] = (m(4) + m(0, 2) + m(-4)).degrees();
  CHECK(hi == Rat(1));
  CHECK(lo == Rat(-1));
  auto [hi2, lo2] = m(18).degrees();
  CHECK(hi2 == Rat(9, 2));
  CHECK(lo2 == Rat(9, 2));
  CHECK_THROWS_AS(QLaurent().degrees(), DomainError);
}

TEST_CASE("mirror") {
  QLaurent pal = m(2) + m(-2);
  CHECK(pal.mirror() == pal);
  CHECK(m(4).mirror() == m(-4));
  QLaurent f = m(7, 3) + m(-2, -1) + m(1);
  auto [hi, lo] = f.degrees();
  auto [mhi, mlo] = f.mirror().degrees();
  CHECK(mhi == -lo);
  CHECK(mlo == -hi);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    QLaurent f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
    CHECK(f - f == QLaurent());
    QLaurent fg = f * g;
    for (const auto& t : fg.terms()) CHECK(t.c != 0);
    if (!f.is_zero() && !g.is_zero()) {
      auto [fh, fl] = f.degrees();
      auto [gh, gl] = g.degrees();
      auto [ph, pl] = (f * g).degrees();
      CHECK(ph == fh + gh);
      CHECK(pl == fl + gl);
    }
    CHECK(f.mirror().mirror() == f);
    CHECK((f * g).mirror() == f.mirror() * g.mirror());
    CHECK((f + g).mirror() == f.mirror() + g.mirror());
  }
}

TEST_CASE("exact big coefficients") {
  QLaurent f = m(1) + m(0);
  QLaurent p = f.pow(80);
  // central binomial coefficient C(80,40) exceeds 64 bits
  Int c("107507208733336176461620", 10);
  CHECK(p.coeff(40) == c);
}

TEST_CASE("accumulator matches repeated addition") {
  std::mt19937 rng(7);
  LaurentAccumulator acc;
  QLaurent sum;
  for (int i = 0; i < 50; ++i) {
    QLaurent f = random_poly(rng);
    long shift = static_cast<long>(rng() % 21) - 10;
    acc.add(f, shift);
    sum += f.shifted(shift);
  }
  CHECK(acc.take() == sum);
}
