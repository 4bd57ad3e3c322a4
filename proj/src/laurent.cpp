#include "cablejones/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cablejones/errors.hpp"

namespace cj {

QLaurent QLaurent::monomial(long quarter_exp, const Int& c) {
  QLaurent r;
  if (c != 0) r.terms_.push_back({quarter_exp, c});
  return r;
}

QLaurent QLaurent::v_power(const Rat& e, const Int& c) {
  Rat q = e * Rat(4);
  if (!q.is_integer()) throw DomainError("exponent " + e.str() + " is not a multiple of 1/4");
  return monomial(q.to_long(), c);
}

QLaurent QLaurent::loop_value() {
  return from_terms({{-2, -1}, {2, -1}});
}

QLaurent QLaurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.e < b.e; });
  QLaurent r;
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().e == t.e) {
      r.terms_.back().c += t.c;
      if (r.terms_.back().c == 0) r.terms_.pop_back();
    } else if (t.c != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Int QLaurent::coeff(long quarter_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), quarter_exp,
                             [](const Term& t, long e) { return t.e < e; });
  if (it != terms_.end() && it->e == quarter_exp) return it->c;
  return 0;
}

long QLaurent::max_quarter() const {
  if (terms_.empty()) throw DomainError("no degree: zero polynomial");
  return terms_.back().e;
}

long QLaurent::min_quarter() const {
  if (terms_.empty()) throw DomainError("no degree: zero polynomial");
  return terms_.front().e;
}

std::pair<Rat, Rat> QLaurent::degrees() const {
  return {Rat(max_quarter(), 4), Rat(min_quarter(), 4)};
}

QLaurent QLaurent::mirror() const {
  QLaurent r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->e, it->c});
  return r;
}

QLaurent QLaurent::shifted(long quarters) const {
  QLaurent r = *this;
  for (auto& t : r.terms_) t.e += quarters;
  return r;
}

QLaurent QLaurent::scaled(const Int& c) const {
  if (c == 0) return {};
  QLaurent r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

QLaurent QLaurent::pow(unsigned k) const {
  QLaurent result = one();
  QLaurent base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

namespace {

std::vector<QLaurent::Term> merge(const std::vector<QLaurent::Term>& a,
                                  const std::vector<QLaurent::Term>& b, bool subtract) {
  std::vector<QLaurent::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].e < a[i].e) {
      out.push_back({b[j].e, subtract ? Int(-b[j].c) : b[j].c});
      ++j;
    } else {
      Int c = subtract ? Int(a[i].c - b[j].c) : Int(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  long span = (a.max_quarter() - a.min_quarter()) + (b.max_quarter() - b.min_quarter());
  if (span > 4'000'000) {
    std::map<long, Int> acc;
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc[s.e + t.e] += s.c * t.c;
    std::vector<QLaurent::Term> terms;
    for (auto& [e, c] : acc) terms.push_back({e, c});
    return QLaurent::from_terms(std::move(terms));
  }
  LaurentAccumulator acc;
  for (const auto& s : a.terms_) acc.add_scaled(b, s.e, s.c);
  return acc.take();
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Int c = it->c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (it->e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    Rat e(it->e, 4);
    if (e == Rat(1))
      os << "v";
    else if (e.is_integer() && e.sign() > 0)
      os << "v^" << e.str();
    else
      os << "v^(" << e.str() << ")";
  }
  return os.str();
}

void LaurentAccumulator::reserve_range(long lo, long hi) {
  if (buf_.empty()) {
    offset_ = lo;
    buf_.resize(static_cast<size_t>(hi - lo + 1));
    return;
  }
  long cur_lo = offset_;
  long cur_hi = offset_ + static_cast<long>(buf_.size()) - 1;
  if (lo >= cur_lo && hi <= cur_hi) return;
  long new_lo = std::min(lo, cur_lo);
  long new_hi = std::max(hi, cur_hi);
  // grow geometrically so repeated extension stays cheap
  long extra = (new_hi - new_lo + 1) / 2;
  if (new_lo < cur_lo) new_lo -= extra;
  if (new_hi > cur_hi) new_hi += extra;
  std::vector<Int> nb(static_cast<size_t>(new_hi - new_lo + 1));
  for (size_t i = 0; i < buf_.size(); ++i) nb[static_cast<size_t>(cur_lo - new_lo) + i].swap(buf_[i]);
  buf_.swap(nb);
  offset_ = new_lo;
}

void LaurentAccumulator::add(const QLaurent& f, long shift) {
  if (f.is_zero()) return;
  reserve_range(f.min_quarter() + shift, f.max_quarter() + shift);
  for (const auto& t : f.terms()) buf_[static_cast<size_t>(t.e + shift - offset_)] += t.c;
}

void LaurentAccumulator::add_scaled(const QLaurent& f, long shift, const Int& scale) {
  if (f.is_zero() || scale == 0) return;
  reserve_range(f.min_quarter() + shift, f.max_quarter() + shift);
  for (const auto& t : f.terms()) {
    Int& slot = buf_[static_cast<size_t>(t.e + shift - offset_)];
    mpz_addmul(slot.get_mpz_t(), t.c.get_mpz_t(), scale.get_mpz_t());
  }
}

void LaurentAccumulator::add_term(long quarter_exp, const Int& c) {
  if (c == 0) return;
  reserve_range(quarter_exp, quarter_exp);
  buf_[static_cast<size_t>(quarter_exp - offset_)] += c;
}

QLaurent LaurentAccumulator::take() {
  std::vector<QLaurent::Term> terms;
  for (size_t i = 0; i < buf_.size(); ++i)
    if (buf_[i] != 0) terms.push_back({offset_ + static_cast<long>(i), std::move(buf_[i])});
  buf_.clear();
  offset_ = 0;
  return QLaurent::from_terms(std::move(terms));
}

}  // namespace cj
