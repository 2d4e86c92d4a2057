#include <array>
#include <cmath>

#include "gmix/error.hpp"
#include "gmix/image/pipeline.hpp"

namespace gmix::image {

namespace {

constexpr double kKeysA = -0.5;

double keys(double t) {
  t = std::abs(t);
  if (t <= 1.0) return ((kKeysA + 2.0) * t - (kKeysA + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((kKeysA * t - 5.0 * kKeysA) * t + 8.0 * kKeysA) * t - 4.0 * kKeysA;
  return 0.0;
}

std::size_t clamp_index(long i, std::size_t size) {
  if (i < 0) return 0;
  if (static_cast<std::size_t>(i) >= size) return size - 1;
  return static_cast<std::size_t>(i);
}

double source_coord(std::size_t i, std::size_t k) {
  return (static_cast<double>(i) + 0.5) / static_cast<double>(k) - 0.5;
}

}  // namespace

std::string_view to_string(Interpolation m) noexcept {
  switch (m) {
    case Interpolation::Nearest: return "nn";
    case Interpolation::Bilinear: return "bilinear";
    case Interpolation::Bicubic: return "bicubic";
  }
  return "?";
}

Interpolation parse_interpolation(std::string_view name) {
  if (name == "nn" || name == "nearest") return Interpolation::Nearest;
  if (name == "bilinear") return Interpolation::Bilinear;
  if (name == "bicubic") return Interpolation::Bicubic;
  throw Error(ErrorCode::ParseError, "unknown interpolation method '" + std::string(name) + "'");
}

GrayImage magnify(const GrayImage& img, std::size_t k, Interpolation method) {
  if (k < 2) throw Error(ErrorCode::BadParams, "magnification factor must be at least 2");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const std::size_t ow = w * k;
  const std::size_t oh = h * k;
  std::vector<std::uint8_t> out(ow * oh);

  for (std::size_t oy = 0; oy < oh; ++oy) {
    const double sy = source_coord(oy, k);
    const long y0 = static_cast<long>(std::floor(sy));
    const double fy = sy - static_cast<double>(y0);
    for (std::size_t ox = 0; ox < ow; ++ox) {
      std::uint8_t& px = out[oy * ow + ox];
      if (method == Interpolation::Nearest) {
        px = img.at(ox / k, oy / k);
        continue;
      }
      const double sx = source_coord(ox, k);
      const long x0 = static_cast<long>(std::floor(sx));
      const double fx = sx - static_cast<double>(x0);
      double v = 0.0;
      if (method == Interpolation::Bilinear) {
        const std::size_t xa = clamp_index(x0, w), xb = clamp_index(x0 + 1, w);
        const std::size_t ya = clamp_index(y0, h), yb = clamp_index(y0 + 1, h);
        const double top = (1.0 - fx) * img.at(xa, ya) + fx * img.at(xb, ya);
        const double bottom = (1.0 - fx) * img.at(xa, yb) + fx * img.at(xb, yb);
        v = (1.0 - fy) * top + fy * bottom;
      } else {
        std::array<double, 4> wx{}, wy{};
        for (int j = 0; j < 4; ++j) {
          wx[j] = keys(fx - (j - 1));
          wy[j] = keys(fy - (j - 1));
        }
        for (int i = 0; i < 4; ++i) {
          const std::size_t yy = clamp_index(y0 + i - 1, h);
          double row = 0.0;
          for (int j = 0; j < 4; ++j) row += wx[j] * img.at(clamp_index(x0 + j - 1, w), yy);
          v += wy[i] * row;
        }
      }
      px = round_pixel(v);
    }
  }
  return GrayImage(ow, oh, std::move(out));
}

}  // namespace gmix::image
