#include "tomoprior/core.hpp"

#include <cmath>

namespace tomoprior {

bool all_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

namespace {

void require_finite(std::span<const double> values, const char* what) {
  if (!all_finite(values)) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

}  // namespace

Image::Image(int w, int h) : width(w), height(h) {
  if (w < 2 || h < 2) {
    throw std::invalid_argument("Image: width and height must be >= 2");
  }
  data.assign(static_cast<std::size_t>(w) * h, 0.0);
}

Image::Image(int w, int h, std::vector<double> values)
    : width(w), height(h), data(std::move(values)) {
  if (w < 2 || h < 2) {
    throw std::invalid_argument("Image: width and height must be >= 2");
  }
  if (data.size() != static_cast<std::size_t>(w) * h) {
    throw std::invalid_argument("Image: data length != width * height");
  }
  require_finite(data, "Image");
}

namespace {

void validate_angles(const std::vector<double>& angles) {
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i]) || angles[i] < 0.0 || angles[i] >= 180.0) {
      throw std::invalid_argument("angles must lie in [0, 180)");
    }
    if (i > 0 && angles[i] <= angles[i - 1]) {
      throw std::invalid_argument("angles must be strictly increasing");
    }
  }
}

}  // namespace

Sinogram::Sinogram(std::vector<double> angles, int bin_count)
    : angles_deg(std::move(angles)), bins(bin_count) {
  if (bins < 1) throw std::invalid_argument("Sinogram: bins must be >= 1");
  validate_angles(angles_deg);
  data.assign(angles_deg.size() * static_cast<std::size_t>(bins), 0.0);
}

Sinogram::Sinogram(std::vector<double> angles, int bin_count,
                   std::vector<double> values)
    : angles_deg(std::move(angles)), bins(bin_count), data(std::move(values)) {
  if (bins < 1) throw std::invalid_argument("Sinogram: bins must be >= 1");
  validate_angles(angles_deg);
  if (data.size() != angles_deg.size() * static_cast<std::size_t>(bins)) {
    throw std::invalid_argument("Sinogram: data length != |angles| * bins");
  }
  require_finite(data, "Sinogram");
}

CoefVector::CoefVector(std::vector<double> values) : data(std::move(values)) {
  require_finite(data, "CoefVector");
}

AngleSet AngleSet::uniform(int count) {
  if (count < 1) throw std::invalid_argument("AngleSet: count must be >= 1");
  AngleSet s;
  s.degrees.resize(count);
  for (int k = 0; k < count; ++k) {
    s.degrees[k] = 180.0 * k / count;
  }
  return s;
}

AngleSet AngleSet::from_list(std::vector<double> degrees) {
  if (degrees.empty()) {
    throw std::invalid_argument("AngleSet: angle list must be nonempty");
  }
  validate_angles(degrees);
  AngleSet s;
  s.degrees = std::move(degrees);
  return s;
}

AngleSet make_uniform_angles(int count) { return AngleSet::uniform(count); }

double image_linf_diff(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("image_linf_diff: dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  }
  return m;
}

}  // namespace tomoprior
