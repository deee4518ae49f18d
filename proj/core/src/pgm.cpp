#include "bpistego/pgm.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "bpistego/error.hpp"
#include "bpistego/io.hpp"

namespace bpistego {
namespace {

using Kind = ParseError::Kind;

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_whitespace_and_comments() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_unsigned(const char* field) {
    skip_whitespace_and_comments();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      const std::size_t digit = bytes_[pos_] - '0';
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        throw ParseError(Kind::kMalformedHeader,
                         std::string("PGM ") + field + " is too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(Kind::kMalformedHeader,
                       std::string("PGM header: expected ") + field);
    }
    return value;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }
  bool at_whitespace() const {
    return pos_ < bytes_.size() && std::isspace(bytes_[pos_]);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError(Kind::kMalformedHeader, "not a binary PGM (missing P5)");
  }
  HeaderReader reader(bytes.subspan(2));
  if (!reader.at_whitespace()) {
    throw ParseError(Kind::kMalformedHeader, "PGM header: bad magic number");
  }
  const std::size_t width = reader.read_unsigned("width");
  const std::size_t height = reader.read_unsigned("height");
  const std::size_t maxval = reader.read_unsigned("maxval");
  if (width == 0 || height == 0) {
    throw ParseError(Kind::kMalformedHeader, "PGM dimensions must be positive");
  }
  if (maxval != 255) {
    throw ParseError(Kind::kUnsupportedMaxval,
                     "PGM maxval " + std::to_string(maxval) +
                         " unsupported (only 255)");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (!reader.at_whitespace()) {
    throw ParseError(Kind::kMalformedHeader,
                     "PGM header: missing separator before raster");
  }
  reader.advance();

  const std::size_t offset = 2 + reader.pos();
  const std::size_t count = width * height;
  if (bytes.size() - offset < count) {
    throw ParseError(Kind::kTruncatedPayload,
                     "PGM raster truncated: " +
                         std::to_string(bytes.size() - offset) + " of " +
                         std::to_string(count) + " bytes");
  }
  const auto raster = bytes.subspan(offset, count);
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto pixels = image.pixels();
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  return load_pgm(read_binary_file(path));
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image) {
  write_binary_file(path, save_pgm(image));
}

}  // namespace bpistego
