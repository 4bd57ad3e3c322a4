#include <doctest.h>

#include <algorithm>

#include "cablejones/catalog.hpp"
#include "cablejones/errors.hpp"
#include "cablejones/fusion.hpp"

using namespace cj;

namespace {

// Q(n, k1, k2) written out term by term.
Rat q_reference(long m1, long m2, long n, long k1, long k2) {
  Rat q = Rat(k1, 2) - Rat(3 * k1 * k1, 2) - Rat(3 * k1 * k2) - Rat(k2 * k2) - Rat(k1 * m1) - Rat(k1 * k1 * m1) -
          Rat(k2 * m2) - Rat(k2 * k2 * m2) - Rat(6 * k1 * n);
  q += -Rat(3 * k2 * n) + Rat(2 * m1 * n) + Rat(4 * m2 * n) - Rat(k2 * m2 * n) - Rat(2 * n * n) + Rat(m1 * n * n) +
       Rat(2 * m2 * n * n);
  long mu = std::min({2 * k1 + n, 2 * k1 + k2 + n, k2 + 2 * n});
  q += Rat((1 + 8 * k1 + 4 * k2 + 8 * n) * mu - 3 * mu * mu, 2);
  return q;
}

std::vector<FusionParams> grid(long lo, long hi) {
  std::vector<FusionParams> out;
  for (long m1 = lo; m1 <= hi; ++m1)
    for (long m2 = lo; m2 <= hi; ++m2)
      if (m2 != 0 && m2 != -1) out.emplace_back(m1, m2);
  return out;
}

}  // namespace

TEST_CASE("parameters") {
  CHECK_THROWS_AS(FusionParams(2, 0), ParameterError);
  CHECK_THROWS_AS(FusionParams(2, -1), ParameterError);
  CHECK(FusionParams(2, 1).str() == "K(2,1)");
}

TEST_CASE("admissible lattice points") {
  CHECK(admissible(3, {0, 0}));
  CHECK(admissible(3, {3, 0}));
  CHECK(admissible(3, {1, -1}));
  CHECK_FALSE(admissible(3, {4, 0}));
  CHECK_FALSE(admissible(3, {1, 2}));
  CHECK_FALSE(admissible(3, {0, -1}));
}

TEST_CASE("Q matches the written formula") {
  for (const auto& fp : grid(-3, 3))
    for (long n = 0; n <= 6; ++n)
      for (long k1 = 0; k1 <= n; ++k1)
        for (long k2 = -n; k2 <= n; ++k2) {
          if (!admissible(n, {k1, k2})) continue;
          CHECK(q_value(fp, n, {k1, k2}) == q_reference(fp.m1(), fp.m2(), n, k1, k2));
        }
}

TEST_CASE("delta examples") {
  FusionParams k21(2, 1);
  CHECK(delta(k21, 5) == Rat(158));
  CHECK(delta_bruteforce(k21, 5).first == Rat(158));

  FusionParams k02(0, 2);
  CHECK(delta(k02, 3) == delta_bruteforce(k02, 3).first);

  FusionParams k42(-4, -2);
  CHECK(fusion_case(k42) == FusionCase::C1);
  CHECK(delta(k42, 4) == Rat(-32));
  CHECK(delta_bruteforce(k42, 4).first == Rat(-32));
}

TEST_CASE("brute force maximum") {
  FusionParams fp(2, 1);
  for (long n = 0; n <= 8; ++n) {
    auto [best, at] = delta_bruteforce(fp, n);
    CHECK(admissible(n, at));
    CHECK(q_value(fp, n, at) == best);
    for (long k1 = 0; k1 <= n; ++k1)
      for (long k2 = -n; k2 <= n; ++k2)
        if (admissible(n, {k1, k2})) CHECK(q_value(fp, n, {k1, k2}) <= best);
  }
  CHECK_THROWS(delta_bruteforce(fp, 10, 5));
}

TEST_CASE("case formulas agree with the brute force maximum") {
  for (const auto& fp : grid(-4, 4))
    for (long n = 0; n <= 14; ++n) {
      DeltaValue d = delta_detail(fp, n);
      CHECK_MESSAGE(d.value + d.correction == delta_bruteforce(fp, n).first, fp.str() << " n=" << n);
    }
}

TEST_CASE("d_+ model") {
  FusionParams k21(2, 1);
  QuasiPoly d = dplus_model(k21);
  for (const auto& r : d.coeffs()) {
    CHECK(r.a == Rat(37, 8));
    CHECK(r.b == Rat(-1, 4));
  }
  CHECK(d.eval(6) == Rat(321, 2));
  CHECK(d == *catalog("pretzel(-2,3,7)").dplus);

  QuasiPoly k42 = dplus_model(FusionParams(-4, -2));
  for (const auto& r : k42.coeffs()) CHECK(r.b == Rat(-15, 2));

  for (const auto& fp : grid(-3, 3)) {
    QuasiPoly m = dplus_model(fp);
    for (long n = m.valid_from(); n <= m.valid_from() + 12; ++n)
      CHECK_MESSAGE(m.eval(n) == delta(fp, n - 1) + Rat(n - 1, 2), fp.str() << " n=" << n);
  }
}

TEST_CASE("pretzel knots as K(m,1)") {
  for (long m = 2; m <= 5; ++m) {
    QuasiPoly d = dplus_model(FusionParams(m, 1));
    Rat a = Rat(5, 2) + Rat(m) + Rat(1, 4 * m);
    Rat b = Rat(1, 2 * m) - Rat(1, 2);
    Rat shift = Rat(3) + Rat(3 * m, 4) - Rat(1, 4 * m);
    for (const auto& r : d.coeffs()) {
      CHECK(r.a == a);
      CHECK(r.b == b);
      // d = -shift - m r^2 with |r| <= 1/2
      CHECK(r.d + shift <= Rat(0));
      CHECK(r.d + shift >= Rat(-m, 4));
    }
    CHECK(d == *pretzel_entry(2 * m + 3).dplus);
  }
}

TEST_CASE("b coefficient") {
  CHECK(b_coefficient(FusionParams(2, 1), 1) == Rat(-1, 4));
  CHECK(b_coefficient(FusionParams(-3, -2), 1) == Rat(-13, 2));
  CHECK(b_coefficient(FusionParams(0, 3), 5) == Rat(0));
  CHECK(b_vanishes(FusionParams(0, 3)));
  CHECK(b_vanishes(FusionParams(-1, 1)));
  CHECK_FALSE(b_vanishes(FusionParams(2, 1)));
}

TEST_CASE("b is nonpositive and vanishes exactly on the zero classification") {
  for (const auto& fp : grid(-6, 6)) {
    QuasiPoly d = dplus_model(fp);
    bool zero = false;
    for (long n = 0; n < d.period(); ++n) {
      Rat b = b_coefficient(fp, n);
      CHECK(b <= Rat(0));
      if (b == Rat(0)) zero = true;
    }
    CHECK_MESSAGE(zero == b_vanishes(fp), fp.str());
  }
}
