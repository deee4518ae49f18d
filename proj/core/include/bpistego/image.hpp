#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bpistego {

/// 8-bit grayscale raster, row-major. Width and height are always positive
/// and the pixel buffer always holds exactly width * height values.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height);
  GrayImage(std::size_t width, std::size_t height,
            std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t operator[](std::size_t index) const { return pixels_[index]; }
  std::uint8_t& operator[](std::size_t index) { return pixels_[index]; }

  std::uint8_t at(std::size_t x, std::size_t y) const {
    return pixels_[y * width_ + x];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

}  // namespace bpistego
