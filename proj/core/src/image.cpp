#include "bpistego/image.hpp"

#include <string>

#include "bpistego/error.hpp"

namespace bpistego {

GrayImage::GrayImage(std::size_t width, std::size_t height)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, 0)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0) {
    throw InvalidArgument("image dimensions must be positive");
  }
  if (pixels_.size() != width * height) {
    throw InvalidArgument("pixel buffer holds " +
                          std::to_string(pixels_.size()) + " values, expected " +
                          std::to_string(width * height));
  }
}

}  // namespace bpistego
