#include "fw/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "fw/transforms.hpp"

namespace fw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Eigen::ArrayXd q_multipliers(const GridSpec& grid) {
  const Eigen::ArrayXd k = wavenumbers(grid);
  return (1.0 + 4.0 * M_PI * M_PI * k.square()).inverse();
}

}  // namespace

double multiplier(long k) {
  const double w = kTwoPi * double(k);
  return 1.0 / (1.0 + w * w);
}

KernelEval kernel_closed_form(double x) {
  const double xr = x - std::floor(x);
  const double den = 2.0 * (std::exp(1.0) - 1.0);
  const double a = std::exp(xr), b = std::exp(1.0 - xr);
  KernelEval out;
  out.x = xr;
  out.value = (a + b) / den;
  const double interior = (a - b) / den;
  if (xr == 0.0) {
    out.derivative_left = 0.5;
    out.derivative_right = -0.5;
  } else {
    out.derivative_left = interior;
    out.derivative_right = interior;
  }
  return out;
}

double kernel_fourier_partial_sum(double x, long k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const double xr = x - std::floor(x);
  const std::complex<double> w = std::polar(1.0, kTwoPi * xr);
  std::complex<double> z{1.0, 0.0};
  double sum = 1.0;
  for (long k = 1; k <= k_max; ++k) {
    z *= w;
    sum += 2.0 * multiplier(k) * z.real();
  }
  return sum;
}

Eigen::ArrayXd kernel_fourier_partial_sum(const Eigen::ArrayXd& xs, long k_max) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const Eigen::Index m = xs.size();
  Eigen::ArrayXcd w(m);
  w.real() = (kTwoPi * xs).cos();
  w.imag() = (kTwoPi * xs).sin();
  Eigen::ArrayXcd z = Eigen::ArrayXcd::Ones(m);
  Eigen::ArrayXd sum = Eigen::ArrayXd::Constant(m, 1.0);
  for (long k = 1; k <= k_max; ++k) {
    z *= w;
    sum += (2.0 * multiplier(k)) * z.real();
  }
  return sum;
}

double kernel_lattice_sum(double x, int l_max) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  const double xr = x - std::floor(x);
  // Smallest terms first, compensated, so the truncated sum is accurate to
  // the last bit rather than to l_max rounding errors.
  double sum = 0.0, comp = 0.0;
  const auto add = [&](double v) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (int l = l_max; l >= 1; --l) {
    add(std::exp(-(xr + l)));
    add(std::exp(-(double(l) - xr)));
  }
  add(std::exp(-xr));
  return 0.5 * sum;
}

Spectrum apply_q(const Spectrum& s) {
  Spectrum out{s.grid, Eigen::ArrayXcd(s.coeffs.size())};
  out.coeffs = s.coeffs * q_multipliers(s.grid).cast<std::complex<double>>();
  return out;
}

Spectrum apply_q_dx(const Spectrum& s) { return apply_q(spectral_derivative(s, 1)); }

}  // namespace fw
