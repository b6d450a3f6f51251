#ifndef FW_KERNEL_HPP
#define FW_KERNEL_HPP

#include "fw/field.hpp"

namespace fw {

// Green's kernel K of Q = (id - d^2/dx^2)^{-1} on the unit torus, plus the
// operators Q and Q d/dx. Three independent representations of K:
//   closed form   (e^x + e^{1-x}) / (2(e - 1))          on [0,1)
//   Fourier sum   sum_k e^{2 pi i k x} / (1 + 4 pi^2 k^2)
//   lattice sum   (1/2) sum_l e^{-|x + l|}
// K is smooth away from the lattice and has a corner at x = 0 where the
// one-sided derivatives are -1/2 (right) and +1/2 (left).

struct KernelEval {
  double x;                 // position reduced into [0,1)
  double value;             // K(x) > 0
  double derivative_left;   // one-sided K'
  double derivative_right;  // differs from the left value only at x = 0
};

// Fourier multiplier of Q: 1/(1 + 4 pi^2 k^2).
double multiplier(long k);

KernelEval kernel_closed_form(double x);

// Partial sum over |k| <= k_max; within 1/(2 pi^2 k_max) of the closed form.
double kernel_fourier_partial_sum(double x, long k_max);
Eigen::ArrayXd kernel_fourier_partial_sum(const Eigen::ArrayXd& xs, long k_max);

// Truncated lattice sum over |l| <= l_max; tail below 2 e^{-l_max}.
double kernel_lattice_sum(double x, int l_max);

Spectrum apply_q(const Spectrum& s);
Spectrum apply_q_dx(const Spectrum& s);

}  // namespace fw

#endif
