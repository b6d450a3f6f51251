#include "fw/grid.hpp"

#include <stdexcept>
#include <string>

namespace fw {

GridSpec::GridSpec(int n) : n_(n) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                std::to_string(n));
}

Eigen::ArrayXd GridSpec::points() const {
  Eigen::ArrayXd x(n_);
  for (int j = 0; j < n_; ++j) x[j] = double(j) / n_;
  return x;
}

}  // namespace fw
