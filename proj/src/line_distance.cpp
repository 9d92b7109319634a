#include "funkconics/line_distance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "funkconics/funk_metric.hpp"

namespace funk {

HorizontalLine::HorizontalLine(double y0) : y0_(y0) {
  if (!std::isfinite(y0) || !(std::abs(y0) < 1.0)) {
    std::ostringstream msg;
    msg << "line y = " << y0 << " does not meet the open disk";
    throw std::domain_error(msg.str());
  }
}

GeneralLine::GeneralLine(double theta_, double offset_)
    : theta(theta_), offset(offset_) {
  if (!std::isfinite(theta) || !(std::abs(offset) < 1.0))
    throw std::domain_error("general line must meet the open disk");
}

LineDistanceResult point_to_line(const DiskPoint& p, const HorizontalLine& s) {
  double q = rho(p.y(), s.y0());
  Vec2 witness{p.x() / q, s.y0()};
  return {std::log(q), witness, DiskPoint::admissible(witness.x, witness.y)};
}

LineDistanceResult line_to_point(const HorizontalLine& s, const DiskPoint& p) {
  double q = rho(s.y0(), p.y());
  Vec2 witness{p.x() * q, s.y0()};
  return {std::log(q), witness, DiskPoint::admissible(witness.x, witness.y)};
}

std::pair<HorizontalLine, std::vector<DiskPoint>> reduce_to_horizontal(
    const GeneralLine& line, std::span<const DiskPoint> points) {
  Rotation undo = Rotation::from_angle(line.theta).inverse();
  std::vector<DiskPoint> rotated;
  rotated.reserve(points.size());
  for (const DiskPoint& p : points) rotated.push_back(undo(p));
  return {HorizontalLine(line.offset), std::move(rotated)};
}

}  // namespace funk
