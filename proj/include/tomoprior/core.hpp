// Core value types shared by every module: images, sinograms, angle sets
// and coefficient vectors. All types validate their invariants on
// construction and are immutable values afterwards (safe to share across
// threads without synchronization).
#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tomoprior {

// Thrown on unreadable/unwritable files and malformed on-disk data.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a solver produces a non-finite objective. Carries the
// objective trace accumulated up to the failure.
struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& what,
                            std::vector<double> trace = {})
      : std::runtime_error(what), objective_trace(std::move(trace)) {}
  std::vector<double> objective_trace;
};

bool all_finite(std::span<const double> values);

// Dense 2D grayscale slice on a square pixel grid, row-major, 64-bit
// intensities. Entries may be negative (reconstructions are unconstrained);
// they must be finite.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<double> data;  // width * height, row-major

  Image() = default;
  Image(int w, int h);  // zero-filled
  Image(int w, int h, std::vector<double> values);

  double& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  std::size_t size() const { return data.size(); }
};

// Projection measurements indexed (angle, detector bin), angle-major.
struct Sinogram {
  std::vector<double> angles_deg;  // strictly increasing, each in [0, 180)
  int bins = 0;
  std::vector<double> data;  // |angles| * bins

  Sinogram() = default;
  Sinogram(std::vector<double> angles, int bin_count);  // zero-filled
  Sinogram(std::vector<double> angles, int bin_count, std::vector<double> values);

  int angle_count() const { return static_cast<int>(angles_deg.size()); }
  double& at(int angle, int bin) {
    return data[static_cast<std::size_t>(angle) * bins + bin];
  }
  double at(int angle, int bin) const {
    return data[static_cast<std::size_t>(angle) * bins + bin];
  }
};

// Real coefficient vector (DCT coefficients, eigen coefficients or patch
// codes). Entries must be finite.
struct CoefVector {
  std::vector<double> data;

  CoefVector() = default;
  explicit CoefVector(std::vector<double> values);
  static CoefVector zeros(std::size_t n) {
    CoefVector v;
    v.data.assign(n, 0.0);
    return v;
  }

  std::size_t size() const { return data.size(); }
  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }
};

// Projection angle set in degrees, all in [0, 180), strictly increasing.
struct AngleSet {
  std::vector<double> degrees;

  static AngleSet uniform(int count);
  static AngleSet from_list(std::vector<double> degrees);

  int count() const { return static_cast<int>(degrees.size()); }
};

// count angles at k*180/count, k = 0..count-1.
AngleSet make_uniform_angles(int count);

// Max absolute per-pixel difference; dimensions must match.
double image_linf_diff(const Image& a, const Image& b);

}  // namespace tomoprior
