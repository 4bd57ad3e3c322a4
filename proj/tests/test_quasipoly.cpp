#include <doctest.h>

#include <random>

#include "cablejones/catalog.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/families.hpp"
#include "cablejones/quasipoly.hpp"

using namespace cj;

namespace {

std::map<long, Rat> sample(const std::function<Rat(long)>& f, long lo, long hi) {
  std::map<long, Rat> out;
  for (long n = lo; n <= hi; ++n) out[n] = f(n);
  return out;
}

// 3n^2 - (13 + (-1)^n)/4
Rat low_formula(long n) { return Rat(3 * n * n) - Rat(13 + (n % 2 == 0 ? 1 : -1), 4); }

// 2n^2/3 - n/2 - 1/6 off multiples of three, 2n^2/3 - 5n/6 - 1/2 on them
Rat formula_8_20(long n) {
  Rat n2(n * n);
  if (n % 3 == 0) return Rat(2, 3) * n2 - Rat(5, 6) * Rat(n) - Rat(1, 2);
  return Rat(2, 3) * n2 - Rat(1, 2) * Rat(n) - Rat(1, 6);
}

}  // namespace

TEST_CASE("eval") {
  QuasiPoly m819({{3, 0, Rat(-7, 2)}, {3, 0, -3}});
  CHECK(m819.eval(3) == Rat(24));
  CHECK(QuasiPoly::polynomial(0, 0, 0).eval(17) == Rat(0));
  CHECK(torus_degree(3, 4).eval(2) == Rat(17, 2));
  QuasiPoly late = QuasiPoly::polynomial(1, 0, 0, 4);
  CHECK_THROWS_AS(late.eval(3), DomainError);
  CHECK(late.eval_unchecked(3) == Rat(9));
}

TEST_CASE("period is reduced to the minimal one") {
  QuasiPoly q({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
  CHECK(q.period() == 1);
  QuasiPoly r({{1, 0, 0}, {2, 0, 0}, {1, 0, 0}, {2, 0, 0}});
  CHECK(r.period() == 2);
}

TEST_CASE("fit") {
  QuasiPoly low = fit(sample(low_formula, 1, 12));
  REQUIRE(low.period() == 2);
  CHECK(low.coeffs()[0] == Residue{3, 0, Rat(-7, 2)});
  CHECK(low.coeffs()[1] == Residue{3, 0, -3});

  QuasiPoly k820 = fit(sample(formula_8_20, 1, 18));
  REQUIRE(k820.period() == 3);
  CHECK(k820.coeffs()[0] == Residue{Rat(2, 3), Rat(-5, 6), Rat(-1, 2)});
  CHECK(k820.coeffs()[1] == Residue{Rat(2, 3), Rat(-1, 2), Rat(-1, 6)});
  CHECK(k820.coeffs()[2] == Residue{Rat(2, 3), Rat(-1, 2), Rat(-1, 6)});
  CHECK(k820 == *catalog("8_20").dplus);

  QuasiPoly zero = fit(sample([](long) { return Rat(0); }, 1, 10));
  CHECK(zero.period() == 1);
  CHECK(zero.coeffs()[0] == Residue{0, 0, 0});
}

TEST_CASE("fit reports the first inconsistent sample") {
  // n^3 is not a quasi-polynomial of degree two
  auto cubic = sample([](long n) { return Rat(n * n * n); }, 1, 30);
  CHECK_THROWS_AS(fit(cubic, 4), FitError);
  try {
    fit(cubic, 4);
  } catch (const FitError& e) {
    CHECK(e.first_inconsistent() >= 1);
  }
}

TEST_CASE("fit detects a late start") {
  auto f = sample([](long n) { return n < 4 ? Rat(100) : Rat(2 * n * n - n); }, 1, 20);
  QuasiPoly q = fit(f);
  CHECK(q.period() == 1);
  CHECK(q.valid_from() == 4);
  CHECK(q.coeffs()[0] == Residue{2, -1, 0});
}

TEST_CASE("fit inverts eval on random quasi-polynomials") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> period(1, 6), num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int pi = period(rng);
    std::vector<Residue> coeffs;
    for (int i = 0; i < pi; ++i) coeffs.push_back({Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
    QuasiPoly q(coeffs);
    QuasiPoly back = fit(sample([&](long n) { return q.eval(n); }, 1, 6L * q.period() + 6));
    CHECK(back == q);
  }
}

TEST_CASE("jones slopes and jx") {
  QuasiPoly m819({{3, 0, Rat(-7, 2)}, {3, 0, -3}});
  CHECK(jones_slopes(m819) == SlopeSet{12});
  CHECK(jones_slopes(*catalog("8_19").dminus) == SlopeSet{0});
  // d_+ of T(-5,2) from sampled degrees
  QuasiPoly t = fit(sample([](long n) { return torus_jones(-5, 2, n).degrees().first; }, 1, 12));
  CHECK(jones_slopes(t) == SlopeSet{0});
  CHECK(t == torus_degree(-5, 2));

  CHECK(jx_set(*catalog("8_20").dplus) == SlopeSet{-1, Rat(-5, 3)});
  CHECK(jx_set(*catalog("9_44").dplus) == SlopeSet{-2, Rat(-8, 3)});
  CHECK(jx_set(QuasiPoly::polynomial(0, Rat(1, 2), Rat(-1, 2))) == SlopeSet{1});
}

TEST_CASE("jones slopes do not depend on valid_from") {
  QuasiPoly q({{Rat(7, 6), -1, 0}, {Rat(7, 6), -2, 1}});
  for (long from = 1; from < 8; ++from) CHECK(jones_slopes(q.with_valid_from(from)) == jones_slopes(q));
}

TEST_CASE("mirror model") {
  QuasiPoly q = QuasiPoly::polynomial(3, 0, -3);
  CHECK(mirror_model(q) == QuasiPoly::polynomial(-3, 0, 3));
  QuasiPoly r({{1, Rat(-1, 2), 2}, {Rat(5, 3), 0, Rat(-1, 7)}}, 3);
  CHECK(mirror_model(mirror_model(r)) == r);
  // lowest degrees of the left-handed trefoil
  QuasiPoly left = fit(sample([](long n) { return torus_jones(-2, 3, n).degrees().second; }, 1, 12));
  CHECK(left == mirror_model(torus_degree(2, 3)));
}

TEST_CASE("slope set text") {
  SlopeSet s = SlopeSet::parse("{-5/3, -1, inf}");
  CHECK(s.size() == 3);
  CHECK(s.has_infinity());
  CHECK(s.contains(Rat(-5, 3)));
  CHECK(SlopeSet::parse("-5/3,-1") == SlopeSet{Rat(-5, 3), -1});
  CHECK(SlopeSet{1, 2}.subset_of(SlopeSet{1, 2, 3}));
  CHECK_FALSE(SlopeSet{1, 4}.subset_of(SlopeSet{1, 2, 3}));
  CHECK(SlopeSet{1, -2}.negated() == SlopeSet{-1, 2});
}
