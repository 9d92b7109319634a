#include "funkconics/funk_metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace funk {
namespace {

constexpr double kCoincidentTol = 1e-15;

// sqrt((1-|x|^2)|y|^2 + <x,y>^2) +/- <x,y>, rationalized so neither sign of
// the inner product loses digits.
double sqrt_term_plus(double w, double yy, double xy) {
  double root = std::sqrt(w * yy + xy * xy);
  if (xy >= 0.0) return root + xy;
  return w * yy / (root - xy);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double segment_length(const DiskPoint& a, const DiskPoint& b) {
  Vec2 dir = b - a;
  if (norm(dir) == 0.0) return 0.0;
  // Positive homogeneity of the norm makes the [0,1] parameterization exact.
  auto f = [&](double u) {
    DiskPoint p(a.x() + u * dir.x, a.y() + u * dir.y);
    return funk_norm(p, dir);
  };
  double fa = f(0.0), fm = f(0.5), fb = f(1.0);
  double whole = (fa + 4.0 * fm + fb) / 6.0;
  double tol = 1e-10 * std::max(std::abs(whole), 1e-6);
  return adaptive_simpson(f, 0.0, 1.0, fa, fm, fb, whole, tol, 40);
}

}  // namespace

double funk_norm(const DiskPoint& base, const TangentVector& dir) {
  double yy = norm_sq(dir);
  if (yy == 0.0) return 0.0;
  double w = 1.0 - base.norm_sq();
  double xy = dot(base.vec(), dir);
  return sqrt_term_plus(w, yy, xy) / w;
}

double rho(double eps, double eta) {
  if (!(std::abs(eps) < 1.0) || !(std::abs(eta) < 1.0)) {
    std::ostringstream msg;
    msg << "rho arguments (" << eps << ", " << eta
        << ") must lie in (-1, 1)";
    throw std::domain_error(msg.str());
  }
  double s = sgn(eps - eta);
  return (1.0 + s * eps) / (1.0 + s * eta);
}

FunkDistanceResult funk_distance(const DiskPoint& from, const DiskPoint& to) {
  Vec2 u = to - from;
  double uu = norm_sq(u);
  double pu = dot(from.vec(), u);
  double k = pu * pu + (1.0 - from.norm_sq()) * uu;
  if (k < 0.0) {
    if (k < -1e-15) throw std::domain_error("negative radicand in Funk distance");
    k = 0.0;  // floating-point noise only
  }
  if (norm(u) < kCoincidentTol) return {1.0, k, 0.0};
  double qu = dot(to.vec(), u);
  double sk = std::sqrt(k);
  // sk - qu == |u|^2 (1-|to|^2) / (sk + qu); pick the cancellation-free form.
  double den = (qu > 0.0) ? uu * (1.0 - to.norm_sq()) / (sk + qu) : sk - qu;
  double ratio = uu / den;  // equals r - 1
  return {1.0 + ratio, k, std::log1p(ratio)};
}

double verify_distance_relation(const DiskPoint& from, const DiskPoint& to,
                                double r) {
  if (!(r >= 1.0)) throw std::domain_error("relation requires r >= 1");
  Vec2 scaled{from.x() / r - to.x(), from.y() / r - to.y()};
  return std::abs(norm(scaled) - (r - 1.0) / r);
}

SampledCurve::SampledCurve(std::vector<std::pair<double, DiskPoint>> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2)
    throw std::invalid_argument("curve needs at least 2 samples");
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    if (!(samples_[i - 1].first < samples_[i].first))
      throw std::invalid_argument("curve parameter must increase strictly");
  }
}

double arc_length(const SampledCurve& curve) {
  double total = 0.0;
  const auto& s = curve.samples();
  for (std::size_t i = 1; i < s.size(); ++i)
    total += segment_length(s[i - 1].second, s[i].second);
  return total;
}

double chord_arc_length(const DiskPoint& from, const DiskPoint& to) {
  return segment_length(from, to);
}

}  // namespace funk
