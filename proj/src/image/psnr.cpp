#include <cmath>
#include <cstdint>
#include <limits>

#include "gmix/error.hpp"
#include "gmix/image/pipeline.hpp"

namespace gmix::image {

double psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorCode::DimensionError, "psnr needs images of equal size");
  }
  // Squared 8-bit differences are integers, so the sum is exact and order free.
  std::uint64_t sse = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = int{a.pixels()[i]} - int{b.pixels()[i]};
    sse += static_cast<std::uint64_t>(d * d);
  }
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sse) / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace gmix::image
