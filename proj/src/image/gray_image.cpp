#include "gmix/image/gray_image.hpp"

#include <algorithm>
#include <cmath>

#include "gmix/error.hpp"

namespace gmix::image {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) throw Error(ErrorCode::DimensionError, "image side is zero");
  if (pixels_.size() != width_ * height_) {
    throw Error(ErrorCode::DimensionError, "pixel count does not match width * height");
  }
}

GrayImage GrayImage::filled(std::size_t width, std::size_t height, std::uint8_t value) {
  return GrayImage(width, height, std::vector<std::uint8_t>(width * height, value));
}

std::vector<double> GrayImage::unit_view() const {
  std::vector<double> out(pixels_.size());
  std::transform(pixels_.begin(), pixels_.end(), out.begin(),
                 [](std::uint8_t p) { return p / 255.0; });
  return out;
}

std::uint8_t round_pixel(double value) {
  return static_cast<std::uint8_t>(std::floor(std::clamp(value, 0.0, 255.0) + 0.5));
}

std::uint8_t to_pixel(double unit_value) { return round_pixel(unit_value * 255.0); }

}  // namespace gmix::image
