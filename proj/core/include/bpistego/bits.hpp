#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bpistego {

/// Ordered secret bit stream; every element is 0 or 1.
class BitMessage {
 public:
  BitMessage() = default;
  explicit BitMessage(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  void push_back(std::uint8_t bit);
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const BitMessage&, const BitMessage&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Bit `plane` (0 = first LSB, 1 = second LSB) of a pixel.
std::uint8_t get_bit(std::uint8_t pixel, int plane);

/// Pixel with bit `plane` forced to `bit`; all other bits untouched.
std::uint8_t set_bit(std::uint8_t pixel, int plane, int bit);

/// MSB-first expansion of bytes into bits.
BitMessage pack_bits(std::span<const std::uint8_t> bytes);

struct UnpackedBytes {
  std::vector<std::uint8_t> bytes;
  std::size_t bit_length = 0;
};

/// Inverse of pack_bits. A trailing partial byte is padded with zero bits;
/// `bit_length` keeps the exact count.
UnpackedBytes unpack_bits(const BitMessage& message);

}  // namespace bpistego
