#include "fw/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace fw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

}  // namespace

Spectrum to_spectrum(const Field& f) {
  const int n = f.grid.size();
  if (f.values.size() != n)
    throw std::invalid_argument("field size does not match its grid");
  Eigen::VectorXcd in(n), out(n);
  in.real() = f.values.matrix();
  in.imag().setZero();
  engine().fwd(out.data(), in.data(), n);
  return {f.grid, out.array() / double(n)};
}

Field to_field(const Spectrum& s) {
  const int n = s.grid.size();
  if (s.coeffs.size() != n)
    throw std::invalid_argument("spectrum size does not match its grid");
  Eigen::VectorXcd in = s.coeffs.matrix();
  Eigen::VectorXcd out(n);
  engine().inv(out.data(), in.data(), n);
  return {s.grid, out.array().real() * double(n)};
}

Spectrum spectral_derivative(const Spectrum& s, int order) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("derivative order must be 1, 2, or 3");
  const int n = s.grid.size();
  const Eigen::ArrayXd w = kTwoPi * wavenumbers(s.grid);
  Spectrum d{s.grid, Eigen::ArrayXcd(n)};
  switch (order) {
    case 1:
      d.coeffs = s.coeffs * (std::complex<double>(0, 1) * w.cast<std::complex<double>>());
      break;
    case 2:
      d.coeffs = s.coeffs * (-w.square()).cast<std::complex<double>>();
      break;
    default:
      d.coeffs = s.coeffs * (std::complex<double>(0, -1) * w.cube().cast<std::complex<double>>());
      break;
  }
  if (order % 2 == 1) d.coeffs[n / 2] = 0.0;
  return d;
}

double eval_at(const Spectrum& s, double x) {
  const int n = s.grid.size();
  const double xr = x - std::floor(x);
  double acc = s.coeffs[0].real();
  for (int k = 1; k < n / 2; ++k) {
    double r = k * xr;
    r -= std::floor(r);
    const double c = std::cos(kTwoPi * r), sn = std::sin(kTwoPi * r);
    acc += 2.0 * (s.coeffs[k].real() * c - s.coeffs[k].imag() * sn);
  }
  const std::complex<double> ny = s.coeffs[n / 2];
  if (ny.real() != 0.0 || ny.imag() != 0.0) {
    double r = (n / 2) * xr;
    r -= std::floor(r);
    acc += ny.real() * std::cos(kTwoPi * r) + ny.imag() * std::sin(kTwoPi * r);
  }
  return acc;
}

void enforce_hermitian(Spectrum& s) {
  const int n = s.grid.size();
  auto& c = s.coeffs;
  c[0] = c[0].real();
  c[n / 2] = c[n / 2].real();
  for (int k = 1; k < n / 2; ++k) {
    const std::complex<double> avg = 0.5 * (c[k] + std::conj(c[n - k]));
    c[k] = avg;
    c[n - k] = std::conj(avg);
  }
}

Spectrum truncated(const Spectrum& s, int k_cut) {
  const int n = s.grid.size();
  Spectrum out = s;
  for (int i = 0; i < n; ++i) {
    const int k = i < n / 2 ? i : i - n;
    if (std::abs(k) > k_cut) out.coeffs[i] = 0.0;
  }
  return out;
}

}  // namespace fw
