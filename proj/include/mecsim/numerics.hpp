#ifndef MECSIM_NUMERICS_HPP
#define MECSIM_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>

namespace mecsim {

// E1(x) = integral of exp(-t)/t from x to infinity, x > 0.
// Series expansion below x = 1, continued fraction above.
// Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

// Analytic envelope of E1: 0.5*exp(-x)*ln(1+2/x) < E1(x) < exp(-x)*ln(1+1/x).
double e1_lower_bound(double x);
double e1_upper_bound(double x);

struct QuadratureSpec {
  double rel_tol = 1.0e-12;
  int max_depth = 60;
};

// Adaptive Simpson quadrature of f on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

struct McResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

// Sample mean and standard error of g(draw()) over n_samples draws.
template <class Sampler, class Fn>
McResult mc_expectation(Sampler&& draw, Fn&& g, std::size_t n_samples) {
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = g(draw());
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  McResult out;
  out.n = n_samples;
  out.mean = mean;
  if (n_samples > 1) {
    const double var = m2 / static_cast<double>(n_samples - 1);
    out.std_error = std::sqrt(var / static_cast<double>(n_samples));
  }
  return out;
}

}  // namespace mecsim

#endif  // MECSIM_NUMERICS_HPP
