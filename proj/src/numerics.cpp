#include "mecsim/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mecsim {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Alternating series -gamma - ln x + sum_n (-1)^{n+1} x^n / (n * n!),
// accurate for x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;  // x^n / n!
  for (int n = 1; n <= 40; ++n) {
    term *= x / n;
    const double contrib = (n % 2 == 1 ? term : -term) / n;
    sum += contrib;
    if (std::abs(contrib) < 1e-17 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// Modified Lentz evaluation of the continued fraction
// E1(x) = exp(-x) / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))).
double e1_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: requires x > 0");
  if (x > 700.0) return 0.0;  // below double underflow
  return x <= 1.0 ? e1_series(x) : e1_continued_fraction(x);
}

double e1_lower_bound(double x) {
  return 0.5 * std::exp(-x) * std::log1p(2.0 / x);
}

double e1_upper_bound(double x) {
  return std::exp(-x) * std::log1p(1.0 / x);
}

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fm, double fb, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  const double scale =
      std::max(std::abs(whole), std::numeric_limits<double>::min());
  return adaptive_step(f, a, b, fa, fm, fb, whole, spec.rel_tol * scale,
                       spec.max_depth);
}

}  // namespace mecsim
