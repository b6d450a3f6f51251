#ifndef FW_TRANSFORMS_HPP
#define FW_TRANSFORMS_HPP

#include "fw/field.hpp"

namespace fw {

Spectrum to_spectrum(const Field& f);
Field to_field(const Spectrum& s);

// Multiplies coefficient k by (2 pi i k)^order, order in {1,2,3}.
// The Nyquist coefficient is zeroed for odd orders so the result stays
// the spectrum of a real field.
Spectrum spectral_derivative(const Spectrum& s, int order);

// sum_k u_hat(k) e^{2 pi i k x} at an arbitrary point (real part).
// Exact for band-limited data; assumes Hermitian input.
double eval_at(const Spectrum& s, double x);

// Restores u_hat(-k) = conj(u_hat(k)) and real mean/Nyquist terms by
// averaging paired coefficients.
void enforce_hermitian(Spectrum& s);

// Copy with every coefficient |k| > k_cut zeroed. Any k_cut < n/2 also
// removes the Nyquist mode.
Spectrum truncated(const Spectrum& s, int k_cut);

}  // namespace fw

#endif
