#pragma once

#include <array>
#include <string>
#include <vector>

#include "cablejones/braid.hpp"

namespace cj {

// One crossing [a,b,c,d]: labels listed counterclockwise starting at the
// incoming under-strand, so the under-strand runs a -> c. For sign +1 the
// over-strand runs d -> b, for sign -1 it runs b -> d.
struct PDCrossing {
  std::array<long, 4> arcs{};
  int sign = 1;
  bool operator==(const PDCrossing&) const = default;
};

class PDCode {
 public:
  PDCode() = default;
  // Validates: labels occur exactly twice, orientation is consistent,
  // the 4-valent graph is connected and planar.
  explicit PDCode(std::vector<PDCrossing> crossings, int free_loops = 0);

  // The closure of a braid; labels are renumbered 0..2c-1.
  static PDCode from_braid(const BraidWord& b);
  // JSON text: a list whose items are {"arcs":[a,b,c,d],"sign":s} or [a,b,c,d,s].
  // Four-element items infer the sign from consecutive labels along the orientation.
  static PDCode parse_json(const std::string& text);
  std::string to_json() const;

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int writhe() const;
  int positive_crossings() const;
  int negative_crossings() const;
  int components() const;
  void require_knot() const;

  PDCode mirrored() const;
  // Blackboard m-parallel; copies sit to the right of the direction of travel.
  PDCode cabled(int m) const;

  // Labels renumbered 0..2c-1 (order of first appearance).
  PDCode normalized() const;

 private:
  void validate() const;
  std::vector<PDCrossing> crossings_;
  int free_loops_ = 0;
};

}  // namespace cj
