#ifndef FW_NORMS_HPP
#define FW_NORMS_HPP

#include "fw/field.hpp"

namespace fw {

double norm_l2(const Field& f);
double norm_l2(const Spectrum& s);
double norm_linf(const Field& f);
double norm_hs(const Spectrum& s, double index);

// Extrema of the slope u_x over the torus.
struct ExtremaResult {
  double min_value;     // m1 <= 0 for mean-zero-slope fields
  double min_location;  // xi1 in [0,1)
  double max_value;     // m2
  double max_location;  // xi2 in [0,1)
};

// Grid argmin/argmax of the spectral derivative, each refined by one
// Newton step on u_xx (zero at interior extrema). Ties take the smallest
// grid index; a refined point is kept only when it improves the value and
// the step stays within one cell.
ExtremaResult slope_extrema(const Spectrum& u_hat);
ExtremaResult slope_extrema(const Field& f);

}  // namespace fw

#endif
