#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "cablejones/rational.hpp"

namespace cj {

// Finite set of slopes, optionally containing the slope 1/0.
class SlopeSet {
 public:
  SlopeSet() = default;
  SlopeSet(std::initializer_list<Rat> slopes) : finite_(slopes) {}

  // "{-5/3, -1, inf}" or "-5/3,-1"
  static SlopeSet parse(std::string_view text);

  void insert(const Rat& s) { finite_.insert(s); }
  void insert_infinity() { infinity_ = true; }
  bool contains(const Rat& s) const { return finite_.count(s) > 0; }
  bool has_infinity() const { return infinity_; }
  const std::set<Rat>& finite() const { return finite_; }
  size_t size() const { return finite_.size() + (infinity_ ? 1 : 0); }
  bool empty() const { return size() == 0; }

  bool subset_of(const SlopeSet& other) const;
  SlopeSet union_with(const SlopeSet& other) const;
  SlopeSet negated() const;

  std::string str() const;
  bool operator==(const SlopeSet&) const = default;

 private:
  std::set<Rat> finite_;
  bool infinity_ = false;
};

}  // namespace cj
