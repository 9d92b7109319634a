#pragma once

#include <span>
#include <utility>
#include <vector>

#include "funkconics/geometry.hpp"

namespace funk {

/// Horizontal chord y = y0 of the open disk; |y0| < 1.
class HorizontalLine {
 public:
  explicit HorizontalLine(double y0);
  double y0() const { return y0_; }

 private:
  double y0_;
};

/// A chord in general position: the image of the horizontal line y = offset
/// under rotation by theta.  Rotating the plane by -theta maps it back.
struct GeneralLine {
  double theta = 0.0;
  double offset = 0.0;

  GeneralLine(double theta_, double offset_);
};

/// Distance together with the optimizing point on the line.  The closed-form
/// witness of the line -> point direction can fall outside the unit disk for
/// points deep on the far side; witness_inside reports that instead of
/// erroring.  The distance is still the full-line optimum of the closed form.
struct LineDistanceResult {
  double distance = 0.0;
  Vec2 witness;
  bool witness_inside = true;
};

/// d_F(p, s) = ln rho(p.y, y0); witness (p.x / rho, y0), always inside.
LineDistanceResult point_to_line(const DiskPoint& p, const HorizontalLine& s);

/// d_F(s, p) = ln rho(y0, p.y); witness (p.x * rho, y0), may be flagged.
LineDistanceResult line_to_point(const HorizontalLine& s, const DiskPoint& p);

/// Rotate the configuration by -theta so the line becomes horizontal.
/// Distances computed in the rotated frame equal the originals.
std::pair<HorizontalLine, std::vector<DiskPoint>> reduce_to_horizontal(
    const GeneralLine& line, std::span<const DiskPoint> points);

}  // namespace funk
