#include "cablejones/families.hpp"

#include <cstdlib>
#include <numeric>

#include "cablejones/errors.hpp"

namespace cj {

QLaurent quantum_integer(long m) {
  if (m == 0) return {};
  long k = std::labs(m);
  std::vector<QLaurent::Term> terms;
  terms.reserve(static_cast<size_t>(k));
  for (long j = 0; j < k; ++j) terms.push_back({2 * (k - 1) - 4 * j, m > 0 ? 1 : -1});
  return QLaurent::from_terms(std::move(terms));
}

QLaurent unknot_jones(long n) {
  if (n < 1) throw DomainError("color must be positive");
  return quantum_integer(n);
}

QLaurent torus_jones(long p, long q, long n) {
  if (n < 1) throw DomainError("color must be positive");
  if (std::gcd(p, q) != 1) throw ParameterError("torus parameters must be coprime");
  if (std::labs(p) == 1 || std::labs(q) == 1) return unknot_jones(n);
  if (q < 0) {
    p = -p;
    q = -q;
  }
  LaurentAccumulator acc;
  for (long twok = -(n - 1); twok <= n - 1; twok += 2) {
    // v^(-p k (q k + 1)) with k = twok / 2, in quarter units
    long shift = -p * twok * (q * twok + 2);
    acc.add(quantum_integer(q * twok + 1), shift);
  }
  return acc.take().shifted(p * q * (n * n - 1));
}

QuasiPoly torus_degree(long p, long q) {
  if (p == 0 || q == 0) throw ParameterError("torus parameters must be nonzero");
  if (std::gcd(p, q) != 1) throw ParameterError("torus parameters must be coprime");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (std::labs(p) == 1 || q == 1) return QuasiPoly::polynomial(0, Rat(1, 2), Rat(-1, 2));
  if (p > 0) {
    Rat a(p * q, 4);
    Rat d_odd(-p * q, 4);
    Rat d_even(-p * q - (p - 2) * (q - 2), 4);
    return QuasiPoly({{a, 0, d_even}, {a, 0, d_odd}});
  }
  Rat b(p * q - p + q, 2);
  return QuasiPoly::polynomial(0, b, -b);
}

QuasiPoly delta_to_dplus(const QuasiPoly& delta) {
  int pi = delta.period();
  std::vector<Residue> out(static_cast<size_t>(pi));
  const Rat half(1, 2);
  for (int i = 0; i < pi; ++i) {
    const Residue& r = delta.coeffs()[static_cast<size_t>(mod_floor(i - 1, pi))];
    // a (n-1)^2 + b (n-1) + d + (n-1)/2
    out[static_cast<size_t>(i)] = {r.a, r.b - Rat(2) * r.a + half, r.a - r.b + r.d - half};
  }
  return QuasiPoly(out, delta.valid_from() + 1);
}

namespace {

struct Sets {
  std::vector<size_t> parent;
  explicit Sets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// Circle count of the all-A or all-B state and whether some crossing joins a circle to itself.
std::pair<int, bool> resolve(const PDCode& d, StateSide side) {
  size_t labels = 2 * static_cast<size_t>(d.crossing_count());
  Sets s(labels);
  for (const auto& x : d.crossings()) {
    auto a = static_cast<size_t>(x.arcs[0]), b = static_cast<size_t>(x.arcs[1]);
    auto c = static_cast<size_t>(x.arcs[2]), e = static_cast<size_t>(x.arcs[3]);
    if (side == StateSide::A) {
      s.unite(a, b);
      s.unite(c, e);
    } else {
      s.unite(a, e);
      s.unite(b, c);
    }
  }
  int circles = 0;
  for (size_t i = 0; i < labels; ++i)
    if (s.find(i) == i) ++circles;
  bool loop_edge = false;
  for (const auto& x : d.crossings()) {
    auto a = static_cast<size_t>(x.arcs[0]), b = static_cast<size_t>(x.arcs[1]);
    auto c = static_cast<size_t>(x.arcs[2]);
    if (side == StateSide::A ? s.find(a) == s.find(c) : s.find(a) == s.find(b)) loop_edge = true;
  }
  return {circles, loop_edge};
}

}  // namespace

StateGraphSummary adequate_summary(const PDCode& diagram) {
  if (diagram.crossing_count() == 0) throw DomainError("state graphs need at least one crossing");
  PDCode d = diagram.normalized();
  StateGraphSummary s;
  s.c = d.crossing_count();
  s.c_plus = d.positive_crossings();
  s.c_minus = d.negative_crossings();
  auto [va, loop_a] = resolve(d, StateSide::A);
  auto [vb, loop_b] = resolve(d, StateSide::B);
  s.v_A = va;
  s.v_B = vb;
  s.is_A_adequate = !loop_a;
  s.is_B_adequate = !loop_b;
  return s;
}

StateGraphSummary adequate_summary(const BraidWord& b) { return adequate_summary(PDCode::from_braid(b)); }

QuasiPoly adequate_dplus(const StateGraphSummary& s) {
  if (!s.is_B_adequate) throw HypothesisError("diagram is not B-adequate: degree bound only, not equality");
  return QuasiPoly::polynomial(Rat(s.c_plus, 2), Rat(s.v_B - s.c, 2), Rat(s.c_minus - s.v_B, 2));
}

QuasiPoly adequate_dminus(const StateGraphSummary& s) {
  if (!s.is_A_adequate) throw HypothesisError("diagram is not A-adequate: degree bound only, not equality");
  return QuasiPoly::polynomial(Rat(-s.c_minus, 2), Rat(s.c - s.v_A, 2), Rat(s.v_A - s.c_plus, 2));
}

std::pair<QuasiPoly, QuasiPoly> adequate_degrees(const StateGraphSummary& s) {
  return {adequate_dplus(s), adequate_dminus(s)};
}

SurfaceData adequate_surface(const StateGraphSummary& s, StateSide side) {
  if (side == StateSide::B) {
    if (!s.is_B_adequate) throw HypothesisError("diagram is not B-adequate");
    return SurfaceData(Rat(2 * s.c_plus), s.v_B - s.c, 1);
  }
  if (!s.is_A_adequate) throw HypothesisError("diagram is not A-adequate");
  return SurfaceData(Rat(-2 * s.c_minus), s.v_A - s.c, 1);
}

}  // namespace cj
