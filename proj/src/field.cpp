#include "fw/field.hpp"

#include <stdexcept>
#include <string>

namespace fw {

int Spectrum::index_of(int k) const {
  const int n = grid.size();
  if (k < -n / 2 || k >= n / 2)
    throw std::out_of_range("wavenumber " + std::to_string(k) +
                            " outside [-n/2, n/2) for n = " + std::to_string(n));
  return k >= 0 ? k : k + n;
}

Field zero_field(const GridSpec& grid) {
  return {grid, Eigen::ArrayXd::Zero(grid.size())};
}

Spectrum zero_spectrum(const GridSpec& grid) {
  return {grid, Eigen::ArrayXcd::Zero(grid.size())};
}

Eigen::ArrayXd wavenumbers(const GridSpec& grid) {
  const int n = grid.size();
  Eigen::ArrayXd k(n);
  for (int i = 0; i < n; ++i) k[i] = i < n / 2 ? i : i - n;
  return k;
}

}  // namespace fw
