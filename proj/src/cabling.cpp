#include "cablejones/cabling.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>

namespace cj {

CableParams::CableParams(long p, long q) : p_(p), q_(q) {
  if (std::labs(q) <= 1) throw ParameterError("cable parameter q must satisfy |q| > 1");
  if (std::gcd(p, q) != 1) throw ParameterError("cable parameters " + str() + " are not coprime");
}

CableParams CableParams::normalized() const { return q_ < 0 ? CableParams(-p_, -q_) : *this; }

std::vector<HalfIndex> s_n(long n) {
  if (n < 1) throw DomainError("color must be positive");
  std::vector<HalfIndex> out;
  for (long twok = -(n - 1); twok <= n - 1; twok += 2) out.push_back({twok});
  return out;
}

JonesSource memoize(JonesSource jk) {
  struct Cache {
    std::mutex mu;
    std::map<long, QLaurent> values;
  };
  auto cache = std::make_shared<Cache>();
  return [jk = std::move(jk), cache](long color) {
    {
      std::lock_guard lock(cache->mu);
      auto it = cache->values.find(color);
      if (it != cache->values.end()) return it->second;
    }
    QLaurent value = jk(color);  // computed unlocked; concurrent misses may duplicate work
    std::lock_guard lock(cache->mu);
    return cache->values.emplace(color, std::move(value)).first->second;
  };
}

namespace {

// -p k (q k + 1) with k = twok/2, in quarter units of v
long twist_quarters(const CableParams& c, long twok) { return -c.p() * twok * (c.q() * twok + 2); }

}  // namespace

QLaurent cable_jones(const JonesSource& jk, CableParams params, long n) {
  CableParams c = params.normalized();
  LaurentAccumulator acc;
  for (HalfIndex k : s_n(n)) {
    long color = c.q() * k.twok + 1;
    QLaurent term = color > 0 ? jk(color) : -jk(-color);
    acc.add(term, twist_quarters(c, k.twok));
  }
  return acc.take().shifted(c.p() * c.q() * (n * n - 1));
}

DegreeTable::DegreeTable(QuasiPoly model, std::map<long, Rat> exact)
    : model_(std::move(model)), exact_(std::move(exact)) {}

Rat DegreeTable::dplus(long color) const {
  if (color < 1) throw DomainError("color must be positive");
  if (auto it = exact_.find(color); it != exact_.end()) return it->second;
  return model_.eval(color);
}

Rat term_degree_f(const DegreeTable& base, CableParams params, HalfIndex k) {
  CableParams c = params.normalized();
  long color = c.q() * k.twok + 1;
  return Rat(twist_quarters(c, k.twok), 4) + base.dplus(std::labs(color));
}

std::string to_string(CableBranch b) {
  switch (b) {
    case CableBranch::inherited:
      return "inherited";
    case CableBranch::annulus:
      return "annulus";
    case CableBranch::collision:
      return "collision";
  }
  return "unknown";
}

namespace {

std::string list_ks(const std::vector<HalfIndex>& ks) {
  std::string s;
  for (const auto& k : ks) s += (s.empty() ? "" : ", ") + k.k().str();
  return s;
}

void require_nonpositive_b(const QuasiPoly& q) {
  for (const auto& r : q.coeffs())
    if (r.b.sign() > 0) throw HypothesisError("hypothesis b(n) <= 0 violated (b = " + r.b.str() + ")");
}

void require_slope_avoided(const QuasiPoly& q, const CableParams& c) {
  for (const auto& r : q.coeffs())
    if (c.ratio() == Rat(4) * r.a)
      throw HypothesisError("Jones slope collision: p/q = " + c.ratio().str() + " is a Jones slope");
}

// Classifies each residue of a cable model and checks the conclusions A in {q^2 a_i, pq/4}, B <= 0.
std::vector<CableBranch> classify(const QuasiPoly& base, const QuasiPoly& model, const CableParams& c) {
  std::vector<CableBranch> out;
  Rat q2(c.q() * c.q());
  Rat annulus(c.p() * c.q(), 4);
  for (const auto& r : model.coeffs()) {
    bool ann = r.a == annulus;
    bool inh = std::any_of(base.coeffs().begin(), base.coeffs().end(),
                           [&](const Residue& br) { return r.a == q2 * br.a; });
    if (!ann && !inh)
      throw HypothesisError("cable slope 4A = " + (Rat(4) * r.a).str() + " is neither pq nor 4q^2 a");
    if (r.b.sign() > 0) throw HypothesisError("cable conclusion B(n) <= 0 fails (B = " + r.b.str() + ")");
    out.push_back(ann && inh ? CableBranch::collision : (ann ? CableBranch::annulus : CableBranch::inherited));
  }
  return out;
}

struct Winner {
  Rat value;
  HalfIndex k;
  std::optional<Rat> margin;
};

// Strict maximum over candidates; equal values at distinct k raise CancellationRisk.
Winner strict_max(long n, const std::vector<std::pair<Rat, HalfIndex>>& values) {
  Winner w{values.front().first, values.front().second, std::nullopt};
  std::optional<Rat> second;
  std::vector<HalfIndex> tied{w.k};
  for (size_t i = 1; i < values.size(); ++i) {
    const auto& [v, k] = values[i];
    if (v > w.value) {
      second = w.value;
      w.value = v;
      w.k = k;
      tied = {k};
    } else if (v == w.value) {
      tied.push_back(k);
    } else if (!second || v > *second) {
      second = v;
    }
  }
  if (tied.size() > 1) throw CancellationRisk(n, tied);
  if (second) w.margin = w.value - *second;
  return w;
}

}  // namespace

CancellationRisk::CancellationRisk(long n, std::vector<HalfIndex> tied)
    : HypothesisError("cancellation risk at n = " + std::to_string(n) + ": tied maximizers k = " + list_ks(tied)),
      n_(n),
      tied_(std::move(tied)) {}

CablePrediction predict_cable_degree(const DegreeTable& base, CableParams params, long n_lo, long n_hi,
                                     int pi_max) {
  CableParams c = params.normalized();
  require_nonpositive_b(base.model());
  if (n_lo < 1 || n_hi < n_lo) throw DomainError("bad color range");
  CablePrediction out;
  out.params = c;
  out.subcase = "maximizer search over S_n";
  std::map<long, Rat> samples;
  for (long n = n_lo; n <= n_hi; ++n) {
    std::vector<std::pair<Rat, HalfIndex>> values;
    for (HalfIndex k : s_n(n)) values.push_back({term_degree_f(base, c, k), k});
    Winner w = strict_max(n, values);
    out.trace.push_back({n, w.k, w.value, w.margin});
    samples[n] = Rat(c.p() * c.q() * (n * n - 1), 4) + w.value;
  }
  out.model = fit(samples, pi_max);
  out.residue_branch = classify(base.model(), out.model, c);
  return out;
}

CablePrediction past_ties(const std::function<CablePrediction(long lo)>& run, long n_lo, long n_hi) {
  long lo = n_lo;
  while (true) {
    try {
      CablePrediction out = run(lo);
      out.tied_below = lo - 1;
      return out;
    } catch (const CancellationRisk& e) {
      if (e.n() < lo || e.n() >= n_hi) throw;
      lo = e.n() + 1;
    }
  }
}

CablePrediction predict_cable_degree_untied(const DegreeTable& base, CableParams params, long n_lo, long n_hi,
                                            int pi_max) {
  return past_ties([&](long lo) { return predict_cable_degree(base, params, lo, n_hi, pi_max); }, n_lo, n_hi);
}

namespace {

struct Quadratic {
  Rat x2, x1, x0;
  Rat at(const Rat& x) const { return x2 * x * x + x1 * x + x0; }
};

// (-pq + 4q^2 a_i) x^2 + (-p + 4q a_i + 2 q b_i eps) x + a_i + b_i eps + d_i
Quadratic g_poly(const Residue& r, const CableParams& c, int eps) {
  Rat p(c.p()), q(c.q());
  Rat e(eps);
  return {-p * q + Rat(4) * q * q * r.a, -p + Rat(4) * q * r.a + Rat(2) * q * r.b * e, r.a + r.b * e + r.d};
}

}  // namespace

CablePrediction closed_form_period2(const QuasiPoly& base, CableParams params) {
  if (base.period() > 2) throw DomainError("closed form needs a base of period at most 2");
  require_nonpositive_b(base);
  CableParams c = params.normalized();
  require_slope_avoided(base, c);
  const Rat pq4(c.p() * c.q(), 4);
  const Rat half(1, 2);
  std::vector<Residue> res(2);
  std::vector<std::string> tags(2);
  std::vector<std::pair<HalfIndex, int>> winner_rule(2);  // twok for small winners, sign of g
  for (int parity = 0; parity < 2; ++parity) {
    // colors 2qk+1 are odd when q is even; otherwise they share the parity of n
    int i = c.q() % 2 == 0 ? 1 : parity;
    const Residue& r = base.coeffs()[static_cast<size_t>(i % base.period())];
    std::string head = std::string(c.q() % 2 == 0 ? "q even" : "q odd") + ", n " + (parity ? "odd" : "even");
    if (c.ratio() < Rat(4) * r.a) {
      // winner k = (n-1)/2 on g_i^+
      Quadratic g = g_poly(r, c, 1);
      res[static_cast<size_t>(parity)] = {pq4 + g.x2 / Rat(4), (g.x1 - g.x2) / Rat(2),
                                          -pq4 + g.x2 / Rat(4) - g.x1 / Rat(2) + g.x0};
      tags[static_cast<size_t>(parity)] = head + ", p/q < 4a: k = (n-1)/2";
    } else {
      bool even = parity == 0;
      Quadratic g = g_poly(r, c, even ? -1 : 1);
      Rat k = even ? -half : Rat(0);
      res[static_cast<size_t>(parity)] = {pq4, 0, -pq4 + g.at(k)};
      tags[static_cast<size_t>(parity)] = head + ", p/q > 4a: k = " + k.str();
    }
  }
  CablePrediction out;
  out.params = c;
  out.subcase = tags[0] + "; " + tags[1];

  // First n from which the proof's maximizer is strictly the largest term, checked
  // with the base formula up to a horizon where the gaps grow monotonically.
  const long horizon = 64 + 8 * base.period();
  long last_bad = 0;
  for (long n = 1; n <= horizon; ++n) {
    int parity = static_cast<int>(n % 2);
    int i = c.q() % 2 == 0 ? 1 : parity;
    const Residue& r = base.coeffs()[static_cast<size_t>(i % base.period())];
    long win_twok;
    if (c.ratio() < Rat(4) * r.a)
      win_twok = n - 1;
    else
      win_twok = parity == 0 ? -1 : 0;
    Rat best;
    bool unique = true;
    bool first = true;
    Rat win_value;
    for (HalfIndex k : s_n(n)) {
      long color = c.q() * k.twok + 1;
      Rat v = Rat(twist_quarters(c, k.twok), 4) + base.eval_unchecked(std::labs(color));
      if (k.twok == win_twok) win_value = v;
      if (first || v > best) {
        best = v;
        first = false;
      }
    }
    for (HalfIndex k : s_n(n)) {
      if (k.twok == win_twok) continue;
      long color = c.q() * k.twok + 1;
      Rat v = Rat(twist_quarters(c, k.twok), 4) + base.eval_unchecked(std::labs(color));
      if (v >= win_value) unique = false;
    }
    if (!unique || best != win_value) last_bad = n;
  }
  out.model = QuasiPoly(res, last_bad + 1);
  out.residue_branch = classify(base, out.model, c);
  return out;
}

CablePrediction quasi_constant_prediction(const QuasiPoly& base, CableParams params, long n_lo, long n_hi,
                                          int pi_max) {
  if (!base.constant_a()) throw DomainError("quasi-constant prediction needs a constant leading coefficient");
  require_nonpositive_b(base);
  CableParams c = params.normalized();
  if (n_lo < 1 || n_hi < n_lo) throw DomainError("bad color range");
  const int pi = base.period();
  const Rat a = base.coeffs()[0].a;
  const int concavity = (Rat(c.p()) - Rat(4 * c.q()) * a).sign();
  if (concavity == 0) throw HypothesisError("Jones slope collision: p/q = 4a");
  CablePrediction out;
  out.params = c;
  out.subcase = concavity < 0 ? "p - 4qa < 0: outermost k on each piece" : "p - 4qa > 0: innermost k on each piece";
  std::map<long, Rat> samples;
  for (long n = n_lo; n <= n_hi; ++n) {
    // piece (eps, color residue) -> chosen k
    std::map<std::pair<int, int>, HalfIndex> pick;
    for (HalfIndex k : s_n(n)) {
      int eps = k.twok >= 0 ? 1 : -1;
      int i = static_cast<int>(mod_floor(std::labs(c.q() * k.twok + 1), pi));
      auto key = std::make_pair(eps, i);
      auto it = pick.find(key);
      bool take_larger = concavity * eps < 0;
      if (it == pick.end())
        pick.emplace(key, k);
      else if (take_larger ? k.twok > it->second.twok : k.twok < it->second.twok)
        it->second = k;
    }
    std::vector<std::pair<Rat, HalfIndex>> values;
    for (const auto& [key, k] : pick) {
      Quadratic h = g_poly(base.coeffs()[static_cast<size_t>(key.second)], c, key.first);
      values.push_back({h.at(k.k()), k});
    }
    Winner w = strict_max(n, values);
    out.trace.push_back({n, w.k, w.value, w.margin});
    samples[n] = Rat(c.p() * c.q() * (n * n - 1), 4) + w.value;
  }
  out.model = fit(samples, pi_max);
  out.residue_branch = classify(base, out.model, c);
  return out;
}

QuasiPoly cable_degree_model(const QuasiPoly& base, CableParams params) {
  if (base.period() <= 2) {
    try {
      return closed_form_period2(base, params).model;
    } catch (const HypothesisError&) {
      // collisions and positive b fall through to the maximizer search
    }
  }
  long span = 8L * base.period() * std::labs(params.q()) + 40;
  return predict_cable_degree_untied(DegreeTable(base), params, base.valid_from(), base.valid_from() + span, 24).model;
}

Thresholds m1_m2(const QuasiPoly& base) {
  if (!base.constant_a()) throw DomainError("M1/M2 need a constant leading coefficient");
  long len = lcm_long(base.period(), 2);
  Thresholds t;
  bool first = true;
  for (long i = 0; i < len; ++i)
    for (long j = 0; j < len; ++j) {
      if ((i - j) % 2 != 0) continue;
      const Residue& ri = base.residue_for(i);
      const Residue& rj = base.residue_for(j);
      Rat db = (ri.b - rj.b).abs();
      Rat m2 = Rat(2) * ri.b + db + (ri.d - rj.d).abs();
      if (first || db > t.m1) t.m1 = db;
      if (first || m2 > t.m2) t.m2 = m2;
      first = false;
    }
  return t;
}

bool admissible_constant_a(const QuasiPoly& base, CableParams params) {
  CableParams c = params.normalized();
  Thresholds t = m1_m2(base);
  Rat a4 = Rat(4) * base.coeffs()[0].a;
  Rat p(c.p()), q(c.q());
  Rat bound = t.m2.sign() > 0 ? t.m2 : Rat(0);
  return p - (a4 - t.m1) * q < Rat(0) || p - (a4 + t.m1) * q > bound;
}

SlopeSet cable_boundary_slopes(const SlopeSet& bs, CableParams params) {
  Rat q2(params.q() * params.q());
  SlopeSet out;
  for (const auto& s : bs.finite()) out.insert(q2 * s);
  if (bs.has_infinity()) out.insert_infinity();
  out.insert(Rat(params.p() * params.q()));
  return out;
}

SurfaceData cable_surface(const SurfaceData& s, CableParams params) {
  if (!s.slope.is_integer()) throw DomainError("cable surface transform needs an integral slope, got " + s.slope.str());
  Int a = s.slope.num();
  long q = std::labs(params.q());
  Int gap = Int(params.p()) - a * params.q();
  Int chi = Int(q) * s.euler + Int(s.boundary_count) * (1 - q) * abs(gap);
  if (!chi.fits_slong_p()) throw DomainError("Euler characteristic overflow");
  return SurfaceData(Rat(q * q) * s.slope, chi.get_si(), s.boundary_count);
}

Rat cable_two_b(const Rat& a, const Rat& b, CableParams params) {
  CableParams c = params.normalized();
  Rat p(c.p()), q(c.q());
  if (c.ratio() == Rat(4) * a) throw HypothesisError("Jones slope collision: p/q = 4a");
  if (c.ratio() > Rat(4) * a) return 0;
  return Rat(2) * q * b + (Rat(1) - q) * (Rat(4) * a * q - p).abs();
}

}  // namespace cj
