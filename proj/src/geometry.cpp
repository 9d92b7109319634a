#include "funkconics/geometry.hpp"

#include <sstream>
#include <stdexcept>

namespace funk {

DiskPoint::DiskPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !admissible(x, y)) {
    std::ostringstream msg;
    msg << "point (" << x << ", " << y
        << ") is not strictly inside the open unit disk";
    throw std::domain_error(msg.str());
  }
}

DiskPoint Rotation::operator()(const DiskPoint& p) const {
  Vec2 v = (*this)(p.vec());
  return {v.x, v.y};
}

}  // namespace funk
