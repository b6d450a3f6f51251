#include <cmath>
#include <random>

#include "doctest.h"
#include "fw/kernel.hpp"
#include "fw/norms.hpp"
#include "fw/transforms.hpp"

using namespace fw;

namespace {

constexpr double tau = 2.0 * M_PI;

template <class F>
Field sample(const GridSpec& g, F&& fn) {
  Field f = zero_field(g);
  for (int j = 0; j < g.size(); ++j) f.values[j] = fn(double(j) / g.size());
  return f;
}

Spectrum random_band_spectrum(const GridSpec& g, std::mt19937& rng, int k_band) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Spectrum s = zero_spectrum(g);
  s.coeff(0) = u(rng);
  for (int k = 1; k <= k_band; ++k) {
    const std::complex<double> c{u(rng), u(rng)};
    s.coeff(k) = c;
    s.coeff(-k) = std::conj(c);
  }
  return s;
}

}  // namespace

TEST_CASE("multiplier values and shape") {
  CHECK(multiplier(0) == 1.0);
  CHECK(multiplier(1) == doctest::Approx(1.0 / (1.0 + 4.0 * M_PI * M_PI)).epsilon(1e-15));
  CHECK(multiplier(-3) == multiplier(3));
  CHECK(multiplier(5) > multiplier(8));
  for (long k : {0L, 1L, 7L, 100L, 100000L}) {
    CHECK(multiplier(k) > 0.0);
    CHECK(multiplier(k) <= 1.0);
  }
}

TEST_CASE("closed-form kernel values and symmetry") {
  const double e = std::exp(1.0);
  CHECK(kernel_closed_form(0.0).value == doctest::Approx((1.0 + e) / (2.0 * (e - 1.0))).epsilon(1e-15));
  CHECK(kernel_closed_form(0.5).value == doctest::Approx(std::sqrt(e) / (e - 1.0)).epsilon(1e-15));
  for (double x : {0.1, 0.25, 0.4}) {
    CHECK(kernel_closed_form(x).value == doctest::Approx(kernel_closed_form(1.0 - x).value).epsilon(1e-15));
  }
  for (int i = 0; i < 1000; ++i) {
    const KernelEval kv = kernel_closed_form(i / 1000.0);
    CHECK(kv.value > 0.0);
    CHECK(kv.value >= kernel_closed_form(0.5).value - 1e-15);
    CHECK(kv.value <= kernel_closed_form(0.0).value + 1e-15);
  }
  CHECK(kernel_closed_form(1.25).x == doctest::Approx(0.25));
  CHECK(kernel_closed_form(-0.25).value == doctest::Approx(kernel_closed_form(0.75).value).epsilon(1e-15));

  // Unit mean, consistent with multiplier(0) = 1.
  const int m = 100000;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) acc += kernel_closed_form((i + 0.5) / m).value;
  CHECK(acc / m == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("kernel corner has one-sided slopes of half") {
  const KernelEval corner = kernel_closed_form(0.0);
  CHECK(corner.derivative_right == -0.5);
  CHECK(corner.derivative_left == 0.5);

  const double h = 1e-6;
  const double right_quotient = (kernel_closed_form(h).value - corner.value) / h;
  const double left_quotient = (corner.value - kernel_closed_form(1.0 - h).value) / h;
  CHECK(std::abs(right_quotient + 0.5) < 1e-5);
  CHECK(std::abs(left_quotient - 0.5) < 1e-5);

  const KernelEval interior = kernel_closed_form(0.3);
  CHECK(interior.derivative_left == interior.derivative_right);
  const double central =
      (kernel_closed_form(0.3 + h).value - kernel_closed_form(0.3 - h).value) / (2.0 * h);
  CHECK(interior.derivative_right == doctest::Approx(central).epsilon(1e-8));
}

TEST_CASE("fourier partial sum converges at the proved rate") {
  CHECK(kernel_fourier_partial_sum(0.37, 0) == 1.0);
  for (double x : {0.0, 0.1, 0.37, 0.5}) {
    const double exact = kernel_closed_form(x).value;
    for (long k_max : {10L, 100L, 1000L}) {
      const double s = kernel_fourier_partial_sum(x, k_max);
      CHECK(std::abs(s - exact) <= 1.0 / (2.0 * M_PI * M_PI * k_max));
    }
  }

  Eigen::ArrayXd xs(5);
  xs << 0.0, 0.1, 0.37, 0.5, 0.9;
  const Eigen::ArrayXd batch = kernel_fourier_partial_sum(xs, 500);
  for (int i = 0; i < xs.size(); ++i)
    CHECK(std::abs(batch[i] - kernel_fourier_partial_sum(xs[i], 500)) < 1e-15);
}

TEST_CASE("lattice sum matches the closed form") {
  const double direct =
      0.5 * (std::exp(-0.25) + std::exp(-0.75) + std::exp(-1.25));
  CHECK(kernel_lattice_sum(0.25, 1) == doctest::Approx(direct).epsilon(1e-15));

  for (double x : {0.0, 0.123, 0.5, 0.77}) {
    CHECK(std::abs(kernel_lattice_sum(x, 40) - kernel_closed_form(x).value) <= 1e-15);
  }
  for (int l_max : {2, 5, 10}) {
    for (double x : {0.0, 0.3, 0.6}) {
      CHECK(std::abs(kernel_lattice_sum(x, l_max) - kernel_closed_form(x).value) <=
            2.0 * std::exp(-double(l_max)));
    }
  }
}

TEST_CASE("q fixes constants and damps single modes") {
  const GridSpec g(64);
  const Spectrum c = to_spectrum(sample(g, [](double) { return 5.0; }));
  const Spectrum qc = apply_q(c);
  CHECK(std::abs(qc.coeff(0) - 5.0) < 1e-14);

  const Spectrum s = to_spectrum(sample(g, [](double x) { return std::sin(tau * x); }));
  const Field qs = to_field(apply_q(s));
  for (int j = 0; j < g.size(); ++j) {
    const double x = double(j) / g.size();
    CHECK(qs.values[j] == doctest::Approx(multiplier(1) * std::sin(tau * x)).epsilon(1e-12));
  }

  const Field qdc = to_field(apply_q_dx(c));
  CHECK(qdc.values.abs().maxCoeff() == 0.0);
  const Field qds = to_field(apply_q_dx(s));
  for (int j = 0; j < g.size(); ++j) {
    const double x = double(j) / g.size();
    CHECK(qds.values[j] == doctest::Approx(tau * multiplier(1) * std::cos(tau * x)).epsilon(1e-12));
  }
}

TEST_CASE("q gains exactly two orders of smoothness") {
  const GridSpec g(128);
  std::mt19937 rng(23);
  const Spectrum v = random_band_spectrum(g, rng, 40);
  const Spectrum qv = apply_q(v);
  for (double s0 : {0.0, 0.5, 2.0}) {
    CHECK(norm_hs(qv, s0 + 2.0) == doctest::Approx(norm_hs(v, s0)).epsilon(1e-12));
    CHECK(norm_hs(qv, s0) <= norm_hs(v, s0));
  }
}

TEST_CASE("q dx is bounded from l2 into h1") {
  const GridSpec g(128);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Spectrum v = random_band_spectrum(g, rng, 40);
    CHECK(norm_hs(apply_q_dx(v), 1.0) <= norm_l2(v) * (1.0 + 1e-12));
  }

  for (int k : {1, 5, 60}) {
    Spectrum mode = zero_spectrum(g);
    mode.coeff(k) = 0.5;
    mode.coeff(-k) = 0.5;
    const double w2 = 4.0 * M_PI * M_PI * k * k;
    const double expected = std::sqrt(w2 / (1.0 + w2));
    CHECK(norm_hs(apply_q_dx(mode), 1.0) / norm_l2(mode) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("q dx commutes with the spectral derivative") {
  const GridSpec g(128);
  std::mt19937 rng(31);
  const Spectrum v = random_band_spectrum(g, rng, 30);
  const Spectrum a = apply_q_dx(spectral_derivative(v, 1));
  const Spectrum b = spectral_derivative(apply_q_dx(v), 1);
  CHECK((a.coeffs - b.coeffs).abs().maxCoeff() < 1e-13);
}

TEST_CASE("q agrees with direct convolution against the kernel") {
  const GridSpec g(64);
  auto v = [](double x) { return std::sin(tau * x) + 0.3 * std::cos(2.0 * tau * x) - 0.2; };
  auto vp = [](double x) { return tau * std::cos(tau * x) - 0.6 * tau * std::sin(2.0 * tau * x); };
  const Spectrum s = to_spectrum(sample(g, v));

  const Field qv = to_field(apply_q(s));
  const Field qvx = to_field(apply_q_dx(s));

  const int m = 16384;
  for (int j = 0; j < g.size(); ++j) {
    const double x = double(j) / g.size();
    double acc = 0.0, accx = 0.0;
    for (int i = 0; i < m; ++i) {
      const double y = (i + 0.5) / m;
      const double kv = kernel_closed_form(y).value;
      acc += kv * v(x - y);
      accx += kv * vp(x - y);
    }
    CHECK(std::abs(qv.values[j] - acc / m) < 1e-7);
    CHECK(std::abs(qvx.values[j] - accx / m) < 1e-7);
  }
}
