// Orthonormal 2D DCT-II synthesis/analysis pair. synthesize() is the
// inverse transform (coefficients -> image), analyze() the forward
// transform and exact adjoint of synthesize(). Coefficients live on a
// row-major height x width grid flattened to a CoefVector; no zig-zag
// ordering.
#pragma once

#include <Eigen/Core>
#include <span>

#include "tomoprior/core.hpp"

namespace tomoprior {

class DctBasis {
 public:
  DctBasis(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  Image synthesize(const CoefVector& theta) const;
  CoefVector analyze(const Image& x) const;

  // Low-level spans of length width*height, no validation.
  void synthesize_into(std::span<const double> theta,
                       std::span<double> image) const;
  void analyze_into(std::span<const double> image,
                    std::span<double> theta) const;

 private:
  int width_;
  int height_;
  Eigen::MatrixXd row_transform_;  // width x width orthonormal DCT-II
  Eigen::MatrixXd col_transform_;  // height x height orthonormal DCT-II
};

}  // namespace tomoprior
