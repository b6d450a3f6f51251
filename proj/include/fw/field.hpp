#ifndef FW_FIELD_HPP
#define FW_FIELD_HPP

#include <complex>

#include <Eigen/Dense>

#include "fw/grid.hpp"

namespace fw {

// Conventions used throughout:
//   x_j = j/n,  u_j = u(x_j)
//   u_hat(k) = (1/n) sum_j u_j e^{-2 pi i jk/n},  k = -n/2 .. n/2-1
//   u_j      = sum_k u_hat(k) e^{+2 pi i jk/n}
// so u_hat(k) matches the analytic Fourier coefficient of a band-limited
// function. Storage is FFT order: index i holds wavenumber k = i for
// i < n/2 and k = i - n otherwise. Real fields satisfy the Hermitian
// symmetry u_hat(-k) = conj(u_hat(k)).
// Norms: |u|_L2^2 = (1/n) sum_j u_j^2 = sum_k |u_hat(k)|^2 (exact discrete
// Parseval), |u|_Hs^2 = sum_k (1 + 4 pi^2 k^2)^s |u_hat(k)|^2.

// Real samples of a 1-periodic function.
struct Field {
  GridSpec grid;
  Eigen::ArrayXd values;
};

// Complex Fourier coefficients of a Field, FFT storage order.
struct Spectrum {
  GridSpec grid;
  Eigen::ArrayXcd coeffs;

  // Access by signed wavenumber, -n/2 <= k < n/2.
  std::complex<double> coeff(int k) const { return coeffs[index_of(k)]; }
  std::complex<double>& coeff(int k) { return coeffs[index_of(k)]; }

  int index_of(int k) const;
};

Field zero_field(const GridSpec& grid);
Spectrum zero_spectrum(const GridSpec& grid);

// Signed wavenumber per storage index: [0, 1, .., n/2-1, -n/2, .., -1].
Eigen::ArrayXd wavenumbers(const GridSpec& grid);

}  // namespace fw

#endif
