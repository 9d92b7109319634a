#include "funkconics/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace funk {
namespace {

// Largest real root of x^3 + a x^2 + b x + c = 0.
double cubic_largest_root(double a, double b, double c) {
  std::array<double, 3> roots{};
  int n = solve_cubic_monic(a, b, c, roots);
  return roots[n - 1];
}

}  // namespace

int solve_quadratic(double a, double b, double c, std::array<double, 2>& out) {
  if (a == 0.0) {
    if (b == 0.0) return 0;
    out[0] = -c / b;
    return 1;
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return 0;
  double root = std::sqrt(disc);
  // q-form avoids cancellation between -b and the root.
  double q = -0.5 * (b + (b >= 0.0 ? root : -root));
  double x0 = q / a;
  double x1 = (q != 0.0) ? c / q : -b / a - x0;
  out[0] = std::min(x0, x1);
  out[1] = std::max(x0, x1);
  return disc == 0.0 ? 1 : 2;
}

int solve_cubic_monic(double a, double b, double c, std::array<double, 3>& out) {
  // Depress: x = t - a/3.
  double shift = a / 3.0;
  double p = b - a * a / 3.0;
  double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  double half_q = 0.5 * q;
  double third_p = p / 3.0;
  double disc = half_q * half_q + third_p * third_p * third_p;
  if (disc > 0.0) {
    double root = std::sqrt(disc);
    double u = std::cbrt(-half_q + root);
    double v = std::cbrt(-half_q - root);
    out[0] = u + v - shift;
    return 1;
  }
  // Three real roots (trigonometric form); disc == 0 gives repeats.
  double m = std::sqrt(std::max(-third_p, 0.0));
  if (m == 0.0) {
    out[0] = -shift;
    return 1;
  }
  double cosarg = std::clamp(-half_q / (m * m * m), -1.0, 1.0);
  double angle = std::acos(cosarg) / 3.0;
  constexpr double kTwoPiThird = 2.0943951023931953;
  for (int i = 0; i < 3; ++i)
    out[i] = 2.0 * m * std::cos(angle - kTwoPiThird * i) - shift;
  std::sort(out.begin(), out.end());
  return 3;
}

std::array<RootCandidate, 4> solve_quartic_monic(double a3, double a2,
                                                 double a1, double a0) {
  // Depress: x = z - a3/4 gives z^4 + p z^2 + q z + r.
  double shift = 0.25 * a3;
  double a3sq = a3 * a3;
  double p = a2 - 0.375 * a3sq;
  double q = a1 - 0.5 * a3 * a2 + 0.125 * a3sq * a3;
  double r = a0 - 0.25 * a3 * a1 + 0.0625 * a3sq * a2 - 0.01171875 * a3sq * a3sq;

  std::array<RootCandidate, 4> roots{};
  auto quad_pair = [&](double b, double c, RootCandidate* dst) {
    // Roots of z^2 + b z + c over the complexes.
    double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
      double root = std::sqrt(disc);
      double u = -0.5 * (b + (b >= 0.0 ? root : -root));
      dst[0] = {u, 0.0};
      dst[1] = {(u != 0.0) ? c / u : -b - u, 0.0};
    } else {
      double im = 0.5 * std::sqrt(-disc);
      dst[0] = {-0.5 * b, im};
      dst[1] = {-0.5 * b, im};
    }
  };

  if (std::abs(q) < 1e-14 * (1.0 + std::abs(p) + std::abs(r))) {
    // Biquadratic: z^2 solves a quadratic.
    std::array<double, 2> zz{};
    int n = solve_quadratic(1.0, p, r, zz);
    if (n == 0) {
      // Two conjugate pairs; report both with the modulus as imag proxy.
      double mag = std::sqrt(std::max(std::sqrt(std::max(r, 0.0)), 0.0));
      for (auto& rc : roots) rc = {-shift, std::max(mag, 1.0)};
      return roots;
    }
    for (int i = 0; i < 2; ++i) {
      double zi = zz[std::min(i, n - 1)];
      if (zi >= 0.0) {
        double s = std::sqrt(zi);
        roots[2 * i] = {s - shift, 0.0};
        roots[2 * i + 1] = {-s - shift, 0.0};
      } else {
        double s = std::sqrt(-zi);
        roots[2 * i] = {-shift, s};
        roots[2 * i + 1] = {-shift, s};
      }
    }
    return roots;
  }

  // Ferrari: pick m > 0 with 8m^3 + 8pm^2 + (2p^2 - 8r)m - q^2 = 0, then
  //   z^4 + pz^2 + qz + r = (z^2 + p/2 + m)^2 - 2m (z - q/(4m))^2.
  double m = cubic_largest_root(p, 0.25 * p * p - r, -0.125 * q * q);
  if (m <= 0.0) m = 1e-300;  // q != 0 forces a positive root; guard roundoff
  double s2m = std::sqrt(2.0 * m);
  double t = q / (4.0 * m);
  // Factors: z^2 - s2m z + (p/2 + m + s2m t) and z^2 + s2m z + (p/2 + m - s2m t).
  quad_pair(-s2m, 0.5 * p + m + s2m * t, roots.data());
  quad_pair(s2m, 0.5 * p + m - s2m * t, roots.data() + 2);
  for (auto& rc : roots) rc.value -= shift;
  return roots;
}

double eval_quartic_monic(double a3, double a2, double a1, double a0, double x) {
  return (((x + a3) * x + a2) * x + a1) * x + a0;
}

double polish_quartic_root(double a3, double a2, double a1, double a0,
                           double x0) {
  double best = x0;
  double best_res = std::abs(eval_quartic_monic(a3, a2, a1, a0, x0));
  double x = x0;
  for (int it = 0; it < 12; ++it) {
    double f = eval_quartic_monic(a3, a2, a1, a0, x);
    double df = ((4.0 * x + 3.0 * a3) * x + 2.0 * a2) * x + a1;
    if (df == 0.0) break;
    double step = f / df;
    x -= step;
    double res = std::abs(eval_quartic_monic(a3, a2, a1, a0, x));
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(x))) break;
  }
  return best;
}

}  // namespace funk
