#include "cablejones/surface.hpp"

#include "cablejones/errors.hpp"

namespace cj {

SurfaceData::SurfaceData(Rat s, long chi, long boundary)
    : slope(std::move(s)), euler(chi), boundary_count(boundary) {
  if (boundary_count < 1) throw DomainError("a surface needs at least one boundary component");
}

std::string SurfaceData::str() const {
  return "(slope " + slope.str() + ", chi " + std::to_string(euler) + ", boundary " +
         std::to_string(boundary_count) + ")";
}

}  // namespace cj
