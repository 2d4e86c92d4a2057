#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "gmix/aggregator.hpp"
#include "gmix/image/gray_image.hpp"

namespace gmix::image {

/// Reads binary (P5) or ASCII (P2) PGM with maxval 255. Throws IoError when
/// the file cannot be read and MalformedPgm for anything else wrong.
GrayImage read_pgm(const std::filesystem::path& path);
GrayImage parse_pgm(std::string_view bytes);

/// Writes binary P5 with maxval 255.
void write_pgm(const GrayImage& img, const std::filesystem::path& path);
std::string encode_pgm(const GrayImage& img);

enum class Boundary { RequireDivisible, ReplicateEdge };

struct ReductionConfig {
  std::size_t block;
  AggregatorSpec op;  ///< arity block * block
  Boundary boundary = Boundary::RequireDivisible;
};

/// Applies the operator to each block x block tile, fed row-major as one
/// vector of unit values. Output is ceil(w/k) x ceil(h/k) under ReplicateEdge
/// and w/k x h/k otherwise.
GrayImage block_reduce(const GrayImage& img, const ReductionConfig& cfg);

enum class Interpolation { Nearest, Bilinear, Bicubic };

std::string_view to_string(Interpolation m) noexcept;
/// Accepts nn/nearest, bilinear, bicubic; ParseError otherwise.
Interpolation parse_interpolation(std::string_view name);

/// Upscales by an integer factor >= 2. Bilinear and bicubic sample at
/// (i + 0.5) / k - 0.5 in source coordinates with edge clamping; bicubic uses
/// the Keys kernel with a = -0.5.
GrayImage magnify(const GrayImage& img, std::size_t factor, Interpolation method);

/// 10 log10(255^2 / MSE); +inf for identical images. DimensionError on a
/// size mismatch.
double psnr(const GrayImage& a, const GrayImage& b);

}  // namespace gmix::image
