// Discrete Radon measurement operator and its exact algebraic adjoint,
// exposed matrix-free. Ray-driven forward projection with linear (Joseph)
// interpolation along the dominant axis; the adjoint scatters with the
// identical weights, so <Ax, y> == <x, A^T y> holds to roundoff.
//
// Geometry: rays are centered on the image center ((w-1)/2, (h-1)/2);
// detector bin b sits at offset (b - (bins-1)/2) * bin_spacing pixels;
// angles are measured in degrees from the image x-axis. Contributions
// outside the image support are zero.
#pragma once

#include <span>
#include <vector>

#include "tomoprior/core.hpp"

namespace tomoprior {

class RadonOperator {
 public:
  // bins == 0 auto-sizes the detector to the smallest odd integer covering
  // the image diagonal.
  RadonOperator(int width, int height, AngleSet angles, int bins = 0,
                double bin_spacing = 1.0);

  Sinogram forward(const Image& x) const;
  Image adjoint(const Sinogram& y) const;

  // Power-method estimate of the operator 2-norm; nondecreasing in the
  // iteration count up to convergence. iterations < 1 is treated as 1.
  double operator_norm_estimate(int iterations) const;

  // Low-level spans: image has width*height entries, sino angles*bins.
  void forward_into(std::span<const double> image,
                    std::span<double> sino) const;
  void adjoint_into(std::span<const double> sino,
                    std::span<double> image) const;

  int width() const { return width_; }
  int height() const { return height_; }
  int bins() const { return bins_; }
  double bin_spacing() const { return spacing_; }
  const std::vector<double>& angles_deg() const { return angles_deg_; }
  int angle_count() const { return static_cast<int>(angles_deg_.size()); }
  std::size_t image_size() const {
    return static_cast<std::size_t>(width_) * height_;
  }
  std::size_t sino_size() const {
    return angles_deg_.size() * static_cast<std::size_t>(bins_);
  }

 private:
  int width_;
  int height_;
  int bins_;
  double spacing_;
  std::vector<double> angles_deg_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace tomoprior
