#include "tomoprior/dct.hpp"

#include <cmath>

namespace tomoprior {

namespace {

// Orthonormal 1D DCT-II analysis matrix: T * T^T = I.
Eigen::MatrixXd dct_matrix(int n) {
  Eigen::MatrixXd t(n, n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    for (int i = 0; i < n; ++i) {
      t(k, i) = scale * std::cos(pi * (2 * i + 1) * k / (2.0 * n));
    }
  }
  return t;
}

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                   Eigen::RowMajor>>;
using RowMajorMutableMap =
    Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>>;

}  // namespace

DctBasis::DctBasis(int width, int height) : width_(width), height_(height) {
  if (width < 2 || height < 2) {
    throw std::invalid_argument("DctBasis: width and height must be >= 2");
  }
  row_transform_ = dct_matrix(width);
  col_transform_ = dct_matrix(height);
}

void DctBasis::synthesize_into(std::span<const double> theta,
                               std::span<double> image) const {
  RowMajorMap coeffs(theta.data(), height_, width_);
  RowMajorMutableMap out(image.data(), height_, width_);
  out.noalias() = col_transform_.transpose() * coeffs * row_transform_;
}

void DctBasis::analyze_into(std::span<const double> image,
                            std::span<double> theta) const {
  RowMajorMap pixels(image.data(), height_, width_);
  RowMajorMutableMap out(theta.data(), height_, width_);
  out.noalias() = col_transform_ * pixels * row_transform_.transpose();
}

Image DctBasis::synthesize(const CoefVector& theta) const {
  if (theta.size() != static_cast<std::size_t>(width_) * height_) {
    throw std::invalid_argument("synthesize: coefficient length mismatch");
  }
  Image out(width_, height_);
  synthesize_into(theta.data, out.data);
  return out;
}

CoefVector DctBasis::analyze(const Image& x) const {
  if (x.width != width_ || x.height != height_) {
    throw std::invalid_argument("analyze: image dimension mismatch");
  }
  CoefVector out = CoefVector::zeros(x.size());
  analyze_into(x.data, out.data);
  return out;
}

}  // namespace tomoprior
