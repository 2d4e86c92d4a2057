#include <cctype>
#include <fstream>
#include <sstream>

#include "gmix/error.hpp"
#include "gmix/image/pipeline.hpp"

namespace gmix::image {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedPgm, why);
}

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view bytes) : s_(bytes) {}

  // Next whitespace-delimited token, skipping '#' comments.
  std::string_view token() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '#') {
      ++pos_;
    }
    return s_.substr(start, pos_ - start);
  }

  std::size_t number(const char* what) {
    const auto t = token();
    if (t.empty()) malformed(std::string("missing ") + what);
    std::size_t v = 0;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        malformed(std::string("bad ") + what + " '" + std::string(t) + "'");
      }
      v = v * 10 + static_cast<std::size_t>(c - '0');
      if (v > (std::size_t{1} << 32)) malformed(std::string(what) + " too large");
    }
    return v;
  }

  std::size_t pos() const noexcept { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage parse_pgm(std::string_view bytes) {
  HeaderReader in(bytes);
  const auto magic = in.token();
  if (magic != "P5" && magic != "P2") malformed("bad magic '" + std::string(magic) + "'");
  const std::size_t width = in.number("width");
  const std::size_t height = in.number("height");
  const std::size_t maxval = in.number("maxval");
  if (width == 0 || height == 0) malformed("zero image dimension");
  if (maxval != 255) malformed("maxval " + std::to_string(maxval) + " is not supported, need 255");

  const std::size_t count = width * height;
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);
  if (magic == "P5") {
    // Exactly one whitespace byte separates the header from the raster.
    const std::size_t start = in.pos() + 1;
    if (in.pos() >= bytes.size() || start + count > bytes.size()) malformed("truncated raster");
    for (std::size_t i = 0; i < count; ++i) {
      pixels.push_back(static_cast<std::uint8_t>(bytes[start + i]));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t v = in.number("sample");
      if (v > 255) malformed("sample exceeds maxval");
      pixels.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return parse_pgm(buf.str());
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                    "\n255\n";
  out.append(img.pixels().begin(), img.pixels().end());
  return out;
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  const std::string bytes = encode_pgm(img);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

}  // namespace gmix::image
