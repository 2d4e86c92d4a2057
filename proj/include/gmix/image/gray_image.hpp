#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gmix::image {

/// 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  /// Throws DimensionError for a zero side or a pixel count other than
  /// width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);
  static GrayImage filled(std::size_t width, std::size_t height, std::uint8_t value);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }

  /// pixel / 255.
  double unit(std::size_t x, std::size_t y) const { return at(x, y) / 255.0; }
  std::vector<double> unit_view() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// Maps a [0,1] value back to 0..255: scale, clamp, round half up.
std::uint8_t to_pixel(double unit_value);

/// Rounds half up and clamps to 0..255.
std::uint8_t round_pixel(double value);

}  // namespace gmix::image
