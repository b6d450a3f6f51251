#ifndef FW_GRID_HPP
#define FW_GRID_HPP

#include <Eigen/Dense>

namespace fw {

// Uniform periodic grid on the unit torus: x_j = j/n for j = 0..n-1.
// n must be a power of two, at least 8.
class GridSpec {
 public:
  explicit GridSpec(int n);

  int size() const { return n_; }
  double dx() const { return 1.0 / n_; }
  int nyquist() const { return n_ / 2; }

  Eigen::ArrayXd points() const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) { return a.n_ == b.n_; }
  friend bool operator!=(const GridSpec& a, const GridSpec& b) { return a.n_ != b.n_; }

 private:
  int n_;
};

}  // namespace fw

#endif
