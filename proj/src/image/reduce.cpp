#include <algorithm>

#include "gmix/error.hpp"
#include "gmix/image/pipeline.hpp"

namespace gmix::image {

GrayImage block_reduce(const GrayImage& img, const ReductionConfig& cfg) {
  const std::size_t k = cfg.block;
  if (k < 2) throw Error(ErrorCode::BadParams, "block size must be at least 2");
  require_same_arity(k * k, cfg.op.arity(), "block operator");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  if (cfg.boundary == Boundary::RequireDivisible && (w % k != 0 || h % k != 0)) {
    throw Error(ErrorCode::DimensionError, std::to_string(w) + "x" + std::to_string(h) +
                                               " is not divisible by block " + std::to_string(k));
  }
  const std::size_t ow = (w + k - 1) / k;
  const std::size_t oh = (h + k - 1) / k;
  std::vector<std::uint8_t> out(ow * oh);
  std::vector<double> block(k * k);
  for (std::size_t by = 0; by < oh; ++by) {
    for (std::size_t bx = 0; bx < ow; ++bx) {
      for (std::size_t dy = 0; dy < k; ++dy) {
        const std::size_t y = std::min(by * k + dy, h - 1);
        for (std::size_t dx = 0; dx < k; ++dx) {
          block[dy * k + dx] = img.unit(std::min(bx * k + dx, w - 1), y);
        }
      }
      out[by * ow + bx] = to_pixel(cfg.op(block));
    }
  }
  return GrayImage(ow, oh, std::move(out));
}

}  // namespace gmix::image
