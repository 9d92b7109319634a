#pragma once

#include <array>
#include <vector>

namespace funk {

/// Candidate root of a real polynomial: value is the real part, imag the
/// magnitude of the imaginary part reported by the closed-form solver.
struct RootCandidate {
  double value = 0.0;
  double imag = 0.0;
};

/// Real roots of a x^2 + b x + c = 0, ascending.  Degenerate leading
/// coefficients fall through to the linear case.
int solve_quadratic(double a, double b, double c, std::array<double, 2>& out);

/// Real roots of the monic cubic x^3 + a x^2 + b x + c = 0, ascending.
int solve_cubic_monic(double a, double b, double c, std::array<double, 3>& out);

/// All four roots of the monic quartic x^4 + a3 x^3 + a2 x^2 + a1 x + a0 = 0
/// by the resolvent-cubic factorization into two quadratics.  Complex pairs
/// are reported with their imaginary magnitude so callers can filter.
std::array<RootCandidate, 4> solve_quartic_monic(double a3, double a2,
                                                 double a1, double a0);

/// Newton-polish x0 against the monic quartic; returns the iterate with the
/// smallest |p(x)| seen.
double polish_quartic_root(double a3, double a2, double a1, double a0,
                           double x0);

double eval_quartic_monic(double a3, double a2, double a1, double a0, double x);

}  // namespace funk
