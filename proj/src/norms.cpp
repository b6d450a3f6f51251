#include "fw/norms.hpp"

#include <cmath>

#include "fw/transforms.hpp"

namespace fw {

double norm_l2(const Field& f) {
  return std::sqrt(f.values.square().sum() / f.grid.size());
}

double norm_l2(const Spectrum& s) { return std::sqrt(s.coeffs.abs2().sum()); }

double norm_linf(const Field& f) { return f.values.abs().maxCoeff(); }

double norm_hs(const Spectrum& s, double index) {
  const Eigen::ArrayXd k = wavenumbers(s.grid);
  const Eigen::ArrayXd w = (1.0 + 4.0 * M_PI * M_PI * k.square()).pow(index);
  return std::sqrt((w * s.coeffs.abs2()).sum());
}

namespace {

struct Refined {
  double location;
  double value;
};

// One Newton step for u_xx = 0 from the grid candidate x0; fall back to the
// grid value when the step leaves the cell or fails to improve.
Refined refine_extremum(const Spectrum& d1, const Spectrum& d2, const Spectrum& d3,
                        double x0, double v0, bool want_min, double dx) {
  const double fp = eval_at(d2, x0);
  const double fpp = eval_at(d3, x0);
  double x1 = x0;
  if (fpp != 0.0) {
    const double step = -fp / fpp;
    if (std::abs(step) <= dx) x1 = x0 + step;
  }
  x1 -= std::floor(x1);
  const double v1 = eval_at(d1, x1);
  if (want_min ? v1 < v0 : v1 > v0) return {x1, v1};
  return {x0, v0};
}

}  // namespace

ExtremaResult slope_extrema(const Spectrum& u_hat) {
  const int n = u_hat.grid.size();
  const Spectrum d1 = spectral_derivative(u_hat, 1);
  const Spectrum d2 = spectral_derivative(u_hat, 2);
  const Spectrum d3 = spectral_derivative(u_hat, 3);
  const Field ux = to_field(d1);
  int imin = 0, imax = 0;
  for (int i = 1; i < n; ++i) {
    if (ux.values[i] < ux.values[imin]) imin = i;
    if (ux.values[i] > ux.values[imax]) imax = i;
  }
  const double dx = u_hat.grid.dx();
  const Refined lo = refine_extremum(d1, d2, d3, imin * dx, ux.values[imin], true, dx);
  const Refined hi = refine_extremum(d1, d2, d3, imax * dx, ux.values[imax], false, dx);
  return {lo.value, lo.location, hi.value, hi.location};
}

ExtremaResult slope_extrema(const Field& f) { return slope_extrema(to_spectrum(f)); }

}  // namespace fw
