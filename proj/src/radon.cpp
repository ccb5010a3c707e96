#include "tomoprior/radon.hpp"

#include <cmath>
#include <random>

namespace tomoprior {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

RadonOperator::RadonOperator(int width, int height, AngleSet angles, int bins,
                             double bin_spacing)
    : width_(width),
      height_(height),
      bins_(bins),
      spacing_(bin_spacing),
      angles_deg_(std::move(angles.degrees)) {
  if (width < 2 || height < 2) {
    throw std::invalid_argument("RadonOperator: image size must be >= 2x2");
  }
  if (angles_deg_.empty()) {
    throw std::invalid_argument("RadonOperator: need at least one angle");
  }
  if (!(bin_spacing > 0.0)) {
    throw std::invalid_argument("RadonOperator: bin_spacing must be positive");
  }
  if (bins_ == 0) {
    // Smallest odd bin count covering the image diagonal: no truncation.
    const double diag = std::hypot(width, height) / spacing_;
    bins_ = static_cast<int>(std::ceil(diag));
    if (bins_ % 2 == 0) ++bins_;
  }
  if (bins_ < 1) {
    throw std::invalid_argument("RadonOperator: bins must be >= 1");
  }
  cos_.resize(angles_deg_.size());
  sin_.resize(angles_deg_.size());
  for (std::size_t a = 0; a < angles_deg_.size(); ++a) {
    const double rad = angles_deg_[a] * kPi / 180.0;
    cos_[a] = std::cos(rad);
    sin_[a] = std::sin(rad);
  }
}

void RadonOperator::forward_into(std::span<const double> image,
                                 std::span<double> sino) const {
  const double cx = (width_ - 1) / 2.0;
  const double cy = (height_ - 1) / 2.0;
  const double det_center = (bins_ - 1) / 2.0;
  std::fill(sino.begin(), sino.end(), 0.0);

  for (std::size_t a = 0; a < angles_deg_.size(); ++a) {
    const double c = cos_[a];
    const double s = sin_[a];
    double* out = sino.data() + a * static_cast<std::size_t>(bins_);
    if (std::abs(c) >= std::abs(s)) {
      // Ray x*c + y*s = t is closer to vertical: step rows, interpolate
      // between adjacent columns. Path length per row is 1/|c|.
      const double w = 1.0 / std::abs(c);
      for (int b = 0; b < bins_; ++b) {
        const double t = (b - det_center) * spacing_;
        double acc = 0.0;
        for (int j = 0; j < height_; ++j) {
          const double y = j - cy;
          const double px = (t - y * s) / c + cx;
          const int i0 = static_cast<int>(std::floor(px));
          const double f = px - i0;
          const double* row = image.data() + static_cast<std::size_t>(j) * width_;
          if (i0 >= 0 && i0 < width_) acc += (1.0 - f) * row[i0];
          if (i0 + 1 >= 0 && i0 + 1 < width_) acc += f * row[i0 + 1];
        }
        out[b] = acc * w;
      }
    } else {
      const double w = 1.0 / std::abs(s);
      for (int b = 0; b < bins_; ++b) {
        const double t = (b - det_center) * spacing_;
        double acc = 0.0;
        for (int i = 0; i < width_; ++i) {
          const double x = i - cx;
          const double py = (t - x * c) / s + cy;
          const int j0 = static_cast<int>(std::floor(py));
          const double f = py - j0;
          if (j0 >= 0 && j0 < height_) {
            acc += (1.0 - f) * image[static_cast<std::size_t>(j0) * width_ + i];
          }
          if (j0 + 1 >= 0 && j0 + 1 < height_) {
            acc += f * image[static_cast<std::size_t>(j0 + 1) * width_ + i];
          }
        }
        out[b] = acc * w;
      }
    }
  }
}

void RadonOperator::adjoint_into(std::span<const double> sino,
                                 std::span<double> image) const {
  const double cx = (width_ - 1) / 2.0;
  const double cy = (height_ - 1) / 2.0;
  const double det_center = (bins_ - 1) / 2.0;
  std::fill(image.begin(), image.end(), 0.0);

  // Fixed angle-major scatter so accumulation order (and hence the result)
  // is bit-reproducible run to run.
  for (std::size_t a = 0; a < angles_deg_.size(); ++a) {
    const double c = cos_[a];
    const double s = sin_[a];
    const double* in = sino.data() + a * static_cast<std::size_t>(bins_);
    if (std::abs(c) >= std::abs(s)) {
      const double w = 1.0 / std::abs(c);
      for (int b = 0; b < bins_; ++b) {
        const double v = in[b] * w;
        if (v == 0.0) continue;
        const double t = (b - det_center) * spacing_;
        for (int j = 0; j < height_; ++j) {
          const double y = j - cy;
          const double px = (t - y * s) / c + cx;
          const int i0 = static_cast<int>(std::floor(px));
          const double f = px - i0;
          double* row = image.data() + static_cast<std::size_t>(j) * width_;
          if (i0 >= 0 && i0 < width_) row[i0] += (1.0 - f) * v;
          if (i0 + 1 >= 0 && i0 + 1 < width_) row[i0 + 1] += f * v;
        }
      }
    } else {
      const double w = 1.0 / std::abs(s);
      for (int b = 0; b < bins_; ++b) {
        const double v = in[b] * w;
        if (v == 0.0) continue;
        const double t = (b - det_center) * spacing_;
        for (int i = 0; i < width_; ++i) {
          const double x = i - cx;
          const double py = (t - x * c) / s + cy;
          const int j0 = static_cast<int>(std::floor(py));
          const double f = py - j0;
          if (j0 >= 0 && j0 < height_) {
            image[static_cast<std::size_t>(j0) * width_ + i] += (1.0 - f) * v;
          }
          if (j0 + 1 >= 0 && j0 + 1 < height_) {
            image[static_cast<std::size_t>(j0 + 1) * width_ + i] += f * v;
          }
        }
      }
    }
  }
}

Sinogram RadonOperator::forward(const Image& x) const {
  if (x.width != width_ || x.height != height_) {
    throw std::invalid_argument("forward: image dimension mismatch");
  }
  Sinogram out(angles_deg_, bins_);
  forward_into(x.data, out.data);
  return out;
}

Image RadonOperator::adjoint(const Sinogram& y) const {
  if (y.angles_deg != angles_deg_ || y.bins != bins_) {
    throw std::invalid_argument("adjoint: sinogram geometry mismatch");
  }
  Image out(width_, height_);
  adjoint_into(y.data, out.data);
  return out;
}

double RadonOperator::operator_norm_estimate(int iterations) const {
  if (iterations < 1) iterations = 1;
  std::vector<double> v(image_size());
  std::vector<double> proj(sino_size());
  std::vector<double> back(image_size());

  // Fixed seed so the estimate is deterministic.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (double& x : v) x = unit(rng);

  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (double& x : v) x /= norm;

    forward_into(v, proj);
    double proj_sq = 0.0;
    for (double p : proj) proj_sq += p * p;
    estimate = std::sqrt(proj_sq);  // Rayleigh quotient of Phi^T Phi at unit v

    adjoint_into(proj, back);
    v.swap(back);
  }
  return estimate;
}

}  // namespace tomoprior
