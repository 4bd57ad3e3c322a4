#include "cablejones/slope_set.hpp"

#include <sstream>

#include "cablejones/errors.hpp"

namespace cj {

SlopeSet SlopeSet::parse(std::string_view text) {
  std::string s(text);
  for (char& ch : s)
    if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
  std::istringstream in(s);
  SlopeSet out;
  std::string tok;
  while (in >> tok) {
    if (tok == "inf" || tok == "1/0")
      out.insert_infinity();
    else
      out.insert(Rat::parse(tok));
  }
  return out;
}

bool SlopeSet::subset_of(const SlopeSet& other) const {
  if (infinity_ && !other.infinity_) return false;
  for (const auto& s : finite_)
    if (!other.contains(s)) return false;
  return true;
}

SlopeSet SlopeSet::union_with(const SlopeSet& other) const {
  SlopeSet r = *this;
  r.finite_.insert(other.finite_.begin(), other.finite_.end());
  r.infinity_ = infinity_ || other.infinity_;
  return r;
}

SlopeSet SlopeSet::negated() const {
  SlopeSet r;
  for (const auto& s : finite_) r.insert(-s);
  r.infinity_ = infinity_;
  return r;
}

std::string SlopeSet::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& s : finite_) {
    os << (first ? "" : ", ") << s.str();
    first = false;
  }
  if (infinity_) os << (first ? "" : ", ") << "inf";
  os << "}";
  return os.str();
}

}  // namespace cj
