#pragma once

#include <cmath>

namespace funk {

// Points closer to the unit circle than this margin are rejected: the Funk
// log-distances diverge at the boundary and lose conditioning before that.
inline constexpr double kBoundaryMargin = 1e-12;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
};

// Velocity argument of the Funk norm; the zero vector is allowed.
using TangentVector = Vec2;

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm_sq(const Vec2& v) { return v.x * v.x + v.y * v.y; }
inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

/// A point strictly inside the open unit disk; construction rejects anything
/// with ||p|| > 1 - kBoundaryMargin.
class DiskPoint {
 public:
  DiskPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }
  Vec2 vec() const { return {x_, y_}; }
  double norm_sq() const { return x_ * x_ + y_ * y_; }
  double norm() const { return std::hypot(x_, y_); }

  static bool admissible(double x, double y) {
    return std::hypot(x, y) <= 1.0 - kBoundaryMargin;
  }

 private:
  double x_;
  double y_;
};

inline Vec2 operator-(const DiskPoint& a, const DiskPoint& b) {
  return {a.x() - b.x(), a.y() - b.y()};
}

struct Rotation {
  double c = 1.0;
  double s = 0.0;

  static Rotation from_angle(double theta) {
    return {std::cos(theta), std::sin(theta)};
  }
  Rotation inverse() const { return {c, -s}; }
  Vec2 operator()(const Vec2& v) const {
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
  DiskPoint operator()(const DiskPoint& p) const;
};

inline int sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace funk
