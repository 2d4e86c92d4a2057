#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gmix/aggregator.hpp"
#include "gmix/image/pipeline.hpp"

namespace gmix::image {

struct NamedImage {
  std::string name;
  GrayImage image;
};

/// Builds the operator for a given arity (block * block).
struct NamedOperator {
  std::string name;
  std::function<AggregatorSpec(std::size_t arity)> factory;
};

/// PSNR of reduce -> magnify -> compare for every image, method, block and
/// operator.
class ExperimentTable {
 public:
  ExperimentTable(std::vector<std::string> images, std::vector<std::string> operators,
                  std::vector<std::size_t> blocks, std::vector<Interpolation> methods);

  const std::vector<std::string>& images() const noexcept { return images_; }
  const std::vector<std::string>& operators() const noexcept { return operators_; }
  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  const std::vector<Interpolation>& methods() const noexcept { return methods_; }

  double& at(std::size_t image, std::size_t method, std::size_t block, std::size_t op);
  double at(std::size_t image, std::size_t method, std::size_t block, std::size_t op) const;
  /// Mean over images; +inf if any cell is.
  double average(std::size_t method, std::size_t block, std::size_t op) const;
  std::size_t cell_count() const noexcept { return cells_.size(); }

  /// One row per image plus an Avg row; columns ordered method, block,
  /// operator.
  std::string to_csv() const;
  /// One table per method with block groups side by side. In each row and
  /// block group the best value is bold and the runner-up italic.
  std::string to_markdown() const;
  /// One JSON object per cell, then one per average.
  std::string to_json_lines() const;

  friend bool operator==(const ExperimentTable&, const ExperimentTable&) = default;

 private:
  std::size_t index(std::size_t image, std::size_t method, std::size_t block, std::size_t op) const;

  std::vector<std::string> images_;
  std::vector<std::string> operators_;
  std::vector<std::size_t> blocks_;
  std::vector<Interpolation> methods_;
  std::vector<double> cells_;
};

/// "inf" for infinity, otherwise fixed with 5 decimals.
std::string format_psnr(double db);

/// Throws BadParams on an empty list, plus whatever the pipeline throws.
ExperimentTable run_reduction_experiment(const std::vector<NamedImage>& images,
                                         const std::vector<NamedOperator>& operators,
                                         const std::vector<std::size_t>& blocks,
                                         const std::vector<Interpolation>& methods,
                                         Boundary boundary = Boundary::RequireDivisible);

/// Horizontal-plus-vertical ramp, handy for smoke runs.
GrayImage gradient_image(std::size_t width, std::size_t height);

}  // namespace gmix::image
