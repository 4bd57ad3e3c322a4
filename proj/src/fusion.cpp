#include "cablejones/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cj {

FusionParams::FusionParams(long m1, long m2) : m1_(m1), m2_(m2) {
  if (m2 == -1 || m2 == 0) throw ParameterError("fusion parameter m2 must not be -1 or 0");
}

bool admissible(long n, LatticePoint pt) {
  if (pt.k1 < 0 || pt.k1 > n) return false;
  long mid = n + 2 * pt.k2;
  return std::labs(n - 2 * pt.k1) <= mid && mid <= n + 2 * pt.k1;
}

Rat q_value(const FusionParams& fp, long n, LatticePoint pt) {
  if (n < 0) throw DomainError("fusion color must be nonnegative");
  if (!admissible(n, pt))
    throw DomainError("lattice point (" + std::to_string(pt.k1) + "," + std::to_string(pt.k2) +
                      ") is not admissible for n = " + std::to_string(n));
  const Int k1(pt.k1), k2(pt.k2), m1(fp.m1()), m2(fp.m2()), N(n);
  Int mu = std::min({2 * pt.k1 + n, 2 * pt.k1 + pt.k2 + n, pt.k2 + 2 * n});
  // twice the value, to stay integral
  Int twice = k1 - 3 * k1 * k1;
  Int rest = -3 * k1 * k2 - k2 * k2 - k1 * m1 - k1 * k1 * m1 - k2 * m2 - k2 * k2 * m2 - 6 * k1 * N - 3 * k2 * N +
             2 * m1 * N + 4 * m2 * N - k2 * m2 * N - 2 * N * N + m1 * N * N + 2 * m2 * N * N;
  twice += 2 * rest + (1 + 8 * k1 + 4 * k2 + 8 * N) * mu - 3 * mu * mu;
  return Rat(twice, Int(2));
}

std::string to_string(FusionCase c) {
  switch (c) {
    case FusionCase::A:
      return "A";
    case FusionCase::B1:
      return "B-1";
    case FusionCase::B2:
      return "B-2";
    case FusionCase::C1:
      return "C-1";
    case FusionCase::C2:
      return "C-2";
  }
  return "?";
}

FusionCase fusion_case(const FusionParams& fp) {
  const long m1 = fp.m1(), m2 = fp.m2();
  bool in_a = m1 >= 1 && m2 >= 1;
  bool in_b = m1 <= 0 && m2 >= 1;
  bool in_c = m2 <= -2;
  if (in_a + in_b + in_c != 1) throw std::logic_error("fusion cases overlap or miss " + fp.str());
  if (in_a) return FusionCase::A;
  if (in_b) {
    bool b1 = 1 + m1 + m2 <= 0 || (1 + m1 + m2 > 0 && 1 + 2 * m1 + m2 < 0);
    return b1 ? FusionCase::B1 : FusionCase::B2;
  }
  return 2 * m1 <= -3 * m2 ? FusionCase::C1 : FusionCase::C2;
}

namespace {

// c_i for the cases with a free k1, as a fraction of the color n.
Rat center(const FusionParams& fp, FusionCase which, long n) {
  const long m1 = fp.m1(), m2 = fp.m2();
  switch (which) {
    case FusionCase::A:
      return Rat(Int(1 - m1 + m2) + Int(m2) * n, Int(2 * (m1 + m2 - 1)));
    case FusionCase::B2:
      return Rat(Int(1 - m1 - m2) + Int(1 + m2) * n, Int(2 * (1 + m1 + m2)));
    case FusionCase::C2:
      return Rat(Int(2 * (m1 + m2) - 3) + Int(2 * (1 + m2)) * n, Int(2 * (1 - 2 * m1 - 2 * m2)));
    default:
      throw std::logic_error("no center for this case");
  }
}

// Integers in [lo, hi] closest to c (one or two of them).
std::vector<long> closest(const Rat& c, long lo, long hi) {
  long f = c.floor().get_si();
  std::vector<long> cands;
  for (long k = f - 1; k <= f + 2; ++k)
    if (k >= lo && k <= hi) cands.push_back(k);
  if (cands.empty()) return {c < Rat(lo) ? lo : hi};
  Rat best = (Rat(cands[0]) - c).abs();
  for (long k : cands) best = std::min(best, (Rat(k) - c).abs());
  std::vector<long> out;
  for (long k : cands)
    if ((Rat(k) - c).abs() == best) out.push_back(k);
  return out;
}

struct Choice {
  long k1;
  Rat r;  // k1 - c
};

Choice choose(const FusionParams& fp, FusionCase which, long n) {
  Rat c = center(fp, which, n);
  long lo = 0, hi = n;
  if (which == FusionCase::A) hi = n / 2;
  if (which == FusionCase::B2) lo = (n + 1) / 2;
  auto ks = closest(c, lo, hi);
  return {ks.front(), Rat(ks.front()) - c};
}

LatticePoint point_for(FusionCase which, long n, long k1) {
  switch (which) {
    case FusionCase::A:
      return {k1, -k1};
    case FusionCase::B1:
      return {n, 0};
    case FusionCase::B2:
      return {k1, k1 - n};
    case FusionCase::C1:
      return {n, n};
    case FusionCase::C2:
      return {k1, k1};
  }
  return {};
}

}  // namespace

DeltaValue delta_detail(const FusionParams& fp, long n) {
  if (n < 0) throw DomainError("fusion color must be nonnegative");
  FusionCase which = fusion_case(fp);
  DeltaValue out;
  out.which = which;
  if (which == FusionCase::B1 || which == FusionCase::C1) {
    out.point = point_for(which, n, 0);
    out.value = q_value(fp, n, out.point);
    return out;
  }
  Rat c = center(fp, which, n);
  long lo = 0, hi = n;
  if (which == FusionCase::A) hi = n / 2;
  if (which == FusionCase::B2) lo = (n + 1) / 2;
  auto ks = closest(c, lo, hi);
  // both neighbours of a half-integer must give the same value
  Rat v = q_value(fp, n, point_for(which, n, ks.front()));
  for (long k : ks)
    if (q_value(fp, n, point_for(which, n, k)) != v)
      throw std::logic_error("closest integers to c disagree for " + fp.str() + " at n = " + std::to_string(n));
  out.point = point_for(which, n, ks.front());
  out.value = v;
  if (which == FusionCase::C2 && c.is_half_integer()) {
    out.correction = c + Rat(1, 2);
    out.value -= out.correction;
  }
  return out;
}

Rat delta(const FusionParams& fp, long n) { return delta_detail(fp, n).value; }

std::pair<Rat, LatticePoint> delta_bruteforce(const FusionParams& fp, long n, long max_n) {
  if (n < 0) throw DomainError("fusion color must be nonnegative");
  if (n > max_n) throw BudgetError("lattice", n, max_n);
  std::optional<std::pair<Rat, LatticePoint>> best;
  for (long k1 = 0; k1 <= n; ++k1)
    for (long k2 = -n; k2 <= n; ++k2) {
      LatticePoint pt{k1, k2};
      if (!admissible(n, pt)) continue;
      Rat v = q_value(fp, n, pt);
      if (!best || v > best->first) best = {v, pt};
    }
  return *best;
}

Rat b_coefficient(const FusionParams& fp, long n) {
  const long m1 = fp.m1(), m2 = fp.m2();
  switch (fusion_case(fp)) {
    case FusionCase::A:
      return Rat(m2 * (1 - m1), 2 * (m1 + m2 - 1));
    case FusionCase::B1:
      return Rat(1 + m1);
    case FusionCase::B2:
      return Rat(m1 * (m2 - 1), 2 * (1 + m1 + m2));
    case FusionCase::C1:
      return Rat(5, 2) + Rat(m1 + 3 * m2);
    case FusionCase::C2: {
      long g = -1 + 2 * m1 + 2 * m2;
      bool integral = mod_floor(-1 + (1 + m2) * (n - 1), g) == 0;
      return Rat((integral ? -3 + 2 * m1 : -5 + 2 * m1) * (1 + m2), 2 * g);
    }
  }
  return 0;
}

bool b_vanishes(const FusionParams& fp) {
  return ((fp.m1() == 0 || fp.m1() == 1) && fp.m2() >= 1) || (fp.m1() == -1 && fp.m2() == 1);
}

namespace {

// Closed form of d_+ at color n (n >= 1), using the actual r_{n-1}.
Rat closed_dplus(const FusionParams& fp, long n) {
  const long m1 = fp.m1(), m2 = fp.m2();
  const Rat N(n);
  FusionCase which = fusion_case(fp);
  switch (which) {
    case FusionCase::B1:
      return (Rat(1, 2) + Rat(2 * m2)) * N * N + Rat(1 + m1) * N - (Rat(3, 2) + Rat(m1 + 2 * m2));
    case FusionCase::C1:
      return (Rat(5, 2) + Rat(m1 + 3 * m2)) * (N - Rat(1));
    default:
      break;
  }
  Rat r = choose(fp, which, n - 1).r;
  Rat b = b_coefficient(fp, n);
  if (which == FusionCase::A) {
    long d = m1 + m2 - 1;
    Rat base = Rat(m1 + 2 * m2) + Rat(1, 2);
    Rat a = base + Rat(m2 * m2, 4 * d);
    Rat c = -(base - Rat((1 - m1) * (1 - m1), 4 * d)) + Rat(1 - m1 - m2) * r * r;
    return a * N * N + b * N + c;
  }
  if (which == FusionCase::B2) {
    long e = 1 + m1 + m2;
    Rat base = Rat(3, 4) + Rat(3 * m1, 4) + Rat(9 * m2, 4);
    Rat a = base + Rat(m1 * m1, 4 * e);
    Rat c = -(base - Rat((m2 - 1) * (m2 - 1), 4 * e)) + Rat(-1 - m1 - m2) * r * r;
    return a * N * N + b * N + c;
  }
  long g = -1 + 2 * m1 + 2 * m2;
  Rat a = Rat((2 * m1 + 3 * m2) * (2 * m1 + 3 * m2), 2 * g);
  Rat c = -(Rat(1, 2) + Rat(m1 + 2 * m2) - Rat((2 * m1 - 5) * (2 * m1 - 5), 8 * g)) +
          (Rat(1, 2) - Rat(m1 + m2)) * r * r;
  return a * N * N + b * N + c;
}

// Period in n of the residual r_{n-1} and of the C-2 branch selector.
long model_period(const FusionParams& fp) {
  const long m1 = fp.m1(), m2 = fp.m2();
  auto step_period = [](long slope, long den) {
    den = std::labs(den);
    return den / std::gcd(std::labs(slope), den);
  };
  switch (fusion_case(fp)) {
    case FusionCase::A:
      return step_period(m2, 2 * (m1 + m2 - 1));
    case FusionCase::B2:
      return step_period(1 + m2, 2 * (1 + m1 + m2));
    case FusionCase::C2: {
      long g = -1 + 2 * m1 + 2 * m2;
      return lcm_long(step_period(2 * (1 + m2), 2 * (1 - 2 * m1 - 2 * m2)), step_period(1 + m2, g));
    }
    default:
      return 1;
  }
}

}  // namespace

QuasiPoly dplus_model(const FusionParams& fp) {
  const long period = model_period(fp);
  // clamping of k1 stops once c_i sits inside its range; start well past that
  const long start = 8 * (std::labs(fp.m1()) + std::labs(fp.m2()) + period) + 8;
  std::vector<Residue> coeffs(static_cast<size_t>(period));
  for (long n = start; n < start + period; ++n) {
    Rat full = closed_dplus(fp, n);
    Rat b = b_coefficient(fp, n);
    Rat a;
    switch (fusion_case(fp)) {
      case FusionCase::C1:
        a = 0;
        break;
      default: {
        Rat n2(n * n);
        // a from the two-point difference within the residue class
        Rat next = closed_dplus(fp, n + period);
        Rat nn(n + period);
        a = (next - full - b * Rat(period)) / (nn * nn - n2);
      }
    }
    Rat d = full - a * Rat(n * n) - b * Rat(n);
    coeffs[static_cast<size_t>(mod_floor(n, period))] = {a, b, d};
  }
  QuasiPoly periodic(coeffs, 1);
  long last_bad = 0;
  for (long n = 1; n < start; ++n)
    if (periodic.eval_unchecked(n) != closed_dplus(fp, n)) last_bad = n;
  return periodic.with_valid_from(last_bad + 1);
}

}  // namespace cj
