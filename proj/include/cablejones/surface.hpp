#pragma once

#include <string>

#include "cablejones/rational.hpp"

namespace cj {

// An essential surface summarized by boundary slope, Euler characteristic
// and number of boundary components.
struct SurfaceData {
  Rat slope;
  long euler = 0;
  long boundary_count = 1;

  SurfaceData() = default;
  SurfaceData(Rat s, long chi, long boundary);
  std::string str() const;
  bool operator==(const SurfaceData&) const = default;
};

}  // namespace cj
