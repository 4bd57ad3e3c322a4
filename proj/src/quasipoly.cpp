#include "cablejones/quasipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace cj {

QuasiPoly::QuasiPoly(std::vector<Residue> coeffs, long valid_from)
    : coeffs_(std::move(coeffs)), valid_from_(valid_from) {
  if (coeffs_.empty()) throw DomainError("quasi-polynomial needs at least one residue");
  if (valid_from_ < 0) throw DomainError("valid_from must be nonnegative");
  size_t pi = coeffs_.size();
  for (size_t d = 1; d < pi; ++d) {
    if (pi % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < pi && repeats; ++i) repeats = coeffs_[i] == coeffs_[i % d];
    if (repeats) {
      coeffs_.resize(d);
      break;
    }
  }
}

QuasiPoly QuasiPoly::polynomial(const Rat& a, const Rat& b, const Rat& d, long valid_from) {
  return QuasiPoly({Residue{a, b, d}}, valid_from);
}

const Residue& QuasiPoly::residue_for(long n) const {
  return coeffs_[static_cast<size_t>(mod_floor(n, period()))];
}

Rat QuasiPoly::eval_unchecked(long n) const {
  const Residue& r = residue_for(n);
  Rat x(n);
  return r.a * x * x + r.b * x + r.d;
}

Rat QuasiPoly::eval(long n) const {
  if (n < valid_from_)
    throw DomainError("n = " + std::to_string(n) + " is below valid_from = " + std::to_string(valid_from_));
  return eval_unchecked(n);
}

bool QuasiPoly::constant_a() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const Residue& r) { return r.a == coeffs_[0].a; });
}

std::string QuasiPoly::str() const {
  std::ostringstream os;
  os << "period " << period() << ", from n=" << valid_from_ << ":";
  for (int i = 0; i < period(); ++i) {
    const auto& r = coeffs_[static_cast<size_t>(i)];
    os << " [n%" << period() << "=" << i << "] " << r.a.str() << " n^2 + " << r.b.str() << " n + " << r.d.str()
       << ";";
  }
  return os.str();
}

namespace {

Residue through_three(long n1, const Rat& y1, long n2, const Rat& y2, long n3, const Rat& y3) {
  Rat f12 = (y2 - y1) / Rat(n2 - n1);
  Rat f23 = (y3 - y2) / Rat(n3 - n2);
  Rat a = (f23 - f12) / Rat(n3 - n1);
  Rat b = f12 - a * Rat(n1 + n2);
  Rat d = y1 - a * Rat(n1) * Rat(n1) - b * Rat(n1);
  return {a, b, d};
}

struct Attempt {
  bool ok = false;
  long valid_from = 0;
  long last_mismatch = -1;
  std::vector<Residue> coeffs;
};

Attempt try_period(const std::map<long, Rat>& samples, int pi) {
  Attempt at;
  long lo = samples.begin()->first;
  long hi = samples.rbegin()->first;
  long worst = lo - 1;
  at.coeffs.resize(static_cast<size_t>(pi));
  for (int i = 0; i < pi; ++i) {
    std::vector<long> ns;
    for (long n = hi; n >= lo; --n)
      if (mod_floor(n, pi) == i) ns.push_back(n);
    if (ns.size() < 3) return at;
    Residue r = through_three(ns[2], samples.at(ns[2]), ns[1], samples.at(ns[1]), ns[0], samples.at(ns[0]));
    for (size_t k = 3; k < ns.size(); ++k) {
      Rat x(ns[k]);
      if (r.a * x * x + r.b * x + r.d != samples.at(ns[k])) {
        worst = std::max(worst, ns[k]);
        break;
      }
    }
    at.coeffs[static_cast<size_t>(i)] = r;
  }
  at.valid_from = worst + 1;
  at.last_mismatch = worst >= lo ? worst : -1;
  // three samples pin each class and at least two more must confirm it
  at.ok = hi - at.valid_from + 1 >= 5L * pi;
  return at;
}

}  // namespace

QuasiPoly fit(const std::map<long, Rat>& samples, int pi_max) {
  if (samples.empty()) throw DomainError("no samples to fit");
  if (pi_max < 1) throw DomainError("pi_max must be positive");
  long lo = samples.begin()->first;
  long hi = samples.rbegin()->first;
  if (hi - lo + 1 != static_cast<long>(samples.size())) throw DomainError("samples must be at consecutive n");
  long inconsistent = hi;
  std::optional<Attempt> best;
  for (int pi = 1; pi <= pi_max; ++pi) {
    Attempt at = try_period(samples, pi);
    if (at.ok && (!best || at.valid_from < best->valid_from)) best = at;
    if (!at.ok && at.last_mismatch >= 0) inconsistent = at.last_mismatch;
  }
  if (best) return QuasiPoly(best->coeffs, std::max(best->valid_from, 0L));
  throw FitError("no quasi-polynomial of period <= " + std::to_string(pi_max) +
                     " fits; first inconsistent n = " + std::to_string(inconsistent),
                 inconsistent);
}

SlopeSet jones_slopes(const QuasiPoly& q) {
  SlopeSet s;
  for (const auto& r : q.coeffs()) s.insert(Rat(4) * r.a);
  return s;
}

SlopeSet jx_set(const QuasiPoly& q) {
  SlopeSet s;
  for (const auto& r : q.coeffs()) s.insert(Rat(2) * r.b);
  return s;
}

QuasiPoly mirror_model(const QuasiPoly& q) {
  std::vector<Residue> c;
  for (const auto& r : q.coeffs()) c.push_back({-r.a, -r.b, -r.d});
  return QuasiPoly(c, q.valid_from());
}

}  // namespace cj
