#include "gmix/image/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "gmix/error.hpp"

namespace gmix::image {

ExperimentTable::ExperimentTable(std::vector<std::string> images,
                                 std::vector<std::string> operators,
                                 std::vector<std::size_t> blocks,
                                 std::vector<Interpolation> methods)
    : images_(std::move(images)),
      operators_(std::move(operators)),
      blocks_(std::move(blocks)),
      methods_(std::move(methods)),
      cells_(images_.size() * operators_.size() * blocks_.size() * methods_.size(),
             std::numeric_limits<double>::quiet_NaN()) {}

std::size_t ExperimentTable::index(std::size_t image, std::size_t method, std::size_t block,
                                   std::size_t op) const {
  if (image >= images_.size() || method >= methods_.size() || block >= blocks_.size() ||
      op >= operators_.size()) {
    throw Error(ErrorCode::RangeError, "experiment table index out of range");
  }
  return ((image * methods_.size() + method) * blocks_.size() + block) * operators_.size() + op;
}

double& ExperimentTable::at(std::size_t image, std::size_t method, std::size_t block,
                            std::size_t op) {
  return cells_[index(image, method, block, op)];
}

double ExperimentTable::at(std::size_t image, std::size_t method, std::size_t block,
                           std::size_t op) const {
  return cells_[index(image, method, block, op)];
}

double ExperimentTable::average(std::size_t method, std::size_t block, std::size_t op) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < images_.size(); ++i) sum += at(i, method, block, op);
  return sum / static_cast<double>(images_.size());
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", db);
  return buf;
}

namespace {

std::string block_label(std::size_t k) { return std::to_string(k) + "x" + std::to_string(k); }

}  // namespace

std::string ExperimentTable::to_csv() const {
  std::string out = "image";
  for (auto m : methods_) {
    for (auto k : blocks_) {
      for (const auto& op : operators_) {
        out += "," + std::string(to_string(m)) + "/" + block_label(k) + "/" + op;
      }
    }
  }
  out += "\n";
  auto row = [&](const std::string& label, auto&& value) {
    out += label;
    for (std::size_t m = 0; m < methods_.size(); ++m) {
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t o = 0; o < operators_.size(); ++o) out += "," + format_psnr(value(m, b, o));
      }
    }
    out += "\n";
  };
  for (std::size_t i = 0; i < images_.size(); ++i) {
    row(images_[i], [&](auto m, auto b, auto o) { return at(i, m, b, o); });
  }
  row("Avg", [&](auto m, auto b, auto o) { return average(m, b, o); });
  return out;
}

std::string ExperimentTable::to_markdown() const {
  std::string out;
  const std::size_t nops = operators_.size();
  for (std::size_t m = 0; m < methods_.size(); ++m) {
    if (m) out += "\n";
    out += "PSNR after " + std::string(to_string(methods_[m])) + " magnification\n\n| image |";
    for (auto k : blocks_) {
      for (const auto& op : operators_) out += " " + block_label(k) + " " + op + " |";
    }
    out += "\n|---|";
    for (std::size_t c = 0; c < blocks_.size() * nops; ++c) out += "---:|";
    out += "\n";

    auto row = [&](const std::string& label, auto&& value) {
      out += "| " + label + " |";
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        // Within a block group the best shown value is bold and the next one
        // italic; equal shown values share the mark.
        std::vector<std::string> cells(nops);
        std::vector<double> shown(nops);
        for (std::size_t o = 0; o < nops; ++o) {
          cells[o] = format_psnr(value(b, o));
          shown[o] = std::stod(cells[o]);
        }
        const double best = *std::max_element(shown.begin(), shown.end());
        double second = -INFINITY;
        for (double v : shown) {
          if (v < best) second = std::max(second, v);
        }
        const bool ranked = std::any_of(shown.begin(), shown.end(), [&](double v) { return v != best; });
        for (std::size_t o = 0; o < nops; ++o) {
          std::string cell = cells[o];
          if (ranked && shown[o] == best) cell = "**" + cell + "**";
          else if (ranked && shown[o] == second) cell = "*" + cell + "*";
          out += " " + cell + " |";
        }
      }
      out += "\n";
    };
    for (std::size_t i = 0; i < images_.size(); ++i) {
      row(images_[i], [&](auto b, auto o) { return at(i, m, b, o); });
    }
    row("Avg", [&](auto b, auto o) { return average(m, b, o); });
  }
  return out;
}

std::string ExperimentTable::to_json_lines() const {
  auto value = [](double db) -> nlohmann::json {
    if (std::isinf(db)) return db > 0 ? "inf" : "-inf";
    return db;
  };
  std::string out;
  auto emit = [&](const std::string& image, std::size_t m, std::size_t b, std::size_t o, double v) {
    nlohmann::json j;
    j["image"] = image;
    j["method"] = std::string(to_string(methods_[m]));
    j["block"] = blocks_[b];
    j["operator"] = operators_[o];
    j["psnr"] = value(v);
    out += j.dump() + "\n";
  };
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t m = 0; m < methods_.size(); ++m) {
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t o = 0; o < operators_.size(); ++o) {
          emit(images_[i], m, b, o, at(i, m, b, o));
        }
      }
    }
  }
  for (std::size_t m = 0; m < methods_.size(); ++m) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::size_t o = 0; o < operators_.size(); ++o) emit("Avg", m, b, o, average(m, b, o));
    }
  }
  return out;
}

ExperimentTable run_reduction_experiment(const std::vector<NamedImage>& images,
                                         const std::vector<NamedOperator>& operators,
                                         const std::vector<std::size_t>& blocks,
                                         const std::vector<Interpolation>& methods,
                                         Boundary boundary) {
  if (images.empty() || operators.empty() || blocks.empty() || methods.empty()) {
    throw Error(ErrorCode::BadParams, "experiment needs images, operators, blocks and methods");
  }
  std::vector<std::string> image_names, op_names;
  for (const auto& im : images) image_names.push_back(im.name);
  for (const auto& op : operators) op_names.push_back(op.name);
  ExperimentTable table(image_names, op_names, blocks, methods);

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t k = blocks[b];
    for (std::size_t o = 0; o < operators.size(); ++o) {
      const ReductionConfig cfg{k, operators[o].factory(k * k), boundary};
      for (std::size_t i = 0; i < images.size(); ++i) {
        const GrayImage& original = images[i].image;
        const GrayImage reduced = block_reduce(original, cfg);
        for (std::size_t m = 0; m < methods.size(); ++m) {
          GrayImage back = magnify(reduced, k, methods[m]);
          if (back.width() != original.width() || back.height() != original.height()) {
            // Edge-replicated reductions magnify past the original; crop.
            std::vector<std::uint8_t> px;
            px.reserve(original.size());
            for (std::size_t y = 0; y < original.height(); ++y) {
              for (std::size_t x = 0; x < original.width(); ++x) px.push_back(back.at(x, y));
            }
            back = GrayImage(original.width(), original.height(), std::move(px));
          }
          table.at(i, m, b, o) = psnr(original, back);
        }
      }
    }
  }
  return table;
}

GrayImage gradient_image(std::size_t width, std::size_t height) {
  std::vector<std::uint8_t> px(width * height);
  const double span = static_cast<double>(width + height - 2);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      px[y * width + x] =
          span > 0 ? round_pixel(255.0 * static_cast<double>(x + y) / span) : std::uint8_t{0};
    }
  }
  return GrayImage(width, height, std::move(px));
}

}  // namespace gmix::image
