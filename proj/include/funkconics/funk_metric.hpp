#pragma once

#include <utility>
#include <vector>

#include "funkconics/geometry.hpp"

namespace funk {

/// Closed-form Funk distance d_F(from, to) = ln r together with the
/// intermediate quantities: k is the radicand of the closed form and r the
/// quotient whose logarithm is the distance.  r >= 1 always, r == 1 iff the
/// distance is zero.
struct FunkDistanceResult {
  double r = 1.0;
  double k = 0.0;
  double distance = 0.0;
};

/// Funk norm F(base, dir): square-root term plus drift term.  Zero iff dir
/// is zero; positively homogeneous but not symmetric in dir -> -dir.
double funk_norm(const DiskPoint& base, const TangentVector& dir);

/// rho(eps, eta) = (1 + sgn(eps - eta) eps) / (1 + sgn(eps - eta) eta).
/// Accepted domain is (-1,1)^2; the sgn choice keeps the result >= 1.
double rho(double eps, double eta);

FunkDistanceResult funk_distance(const DiskPoint& from, const DiskPoint& to);

/// Residual |  ||from/r - to|| - (r-1)/r  |, zero (to tolerance) exactly when
/// d_F(from, to) = ln r.  Requires r >= 1.
double verify_distance_relation(const DiskPoint& from, const DiskPoint& to,
                                double r);

/// Piecewise-linear curve through the disk, parameterized by strictly
/// increasing t; at least two samples.
class SampledCurve {
 public:
  explicit SampledCurve(std::vector<std::pair<double, DiskPoint>> samples);

  const std::vector<std::pair<double, DiskPoint>>& samples() const {
    return samples_;
  }

 private:
  std::vector<std::pair<double, DiskPoint>> samples_;
};

/// Funk arc length of the curve, by adaptive quadrature of the norm along
/// each linear segment (per-segment relative tolerance 1e-10).
double arc_length(const SampledCurve& curve);

/// Arc length of the straight chord from -> to; converges to
/// funk_distance(from, to) since shortest paths are straight lines.
double chord_arc_length(const DiskPoint& from, const DiskPoint& to);

}  // namespace funk
