#include "bpistego/bits.hpp"

#include <algorithm>

#include "bpistego/error.hpp"

namespace bpistego {
namespace {

void check_plane(int plane) {
  if (plane != 0 && plane != 1) {
    throw InvalidArgument("bit plane must be 0 or 1, got " +
                          std::to_string(plane));
  }
}

}  // namespace

BitMessage::BitMessage(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](auto b) { return b > 1; })) {
    throw InvalidArgument("message bits must be 0 or 1");
  }
}

void BitMessage::push_back(std::uint8_t bit) {
  if (bit > 1) throw InvalidArgument("message bits must be 0 or 1");
  bits_.push_back(bit);
}

std::uint8_t get_bit(std::uint8_t pixel, int plane) {
  check_plane(plane);
  return (pixel >> plane) & 1u;
}

std::uint8_t set_bit(std::uint8_t pixel, int plane, int bit) {
  check_plane(plane);
  if (bit != 0 && bit != 1) {
    throw InvalidArgument("bit value must be 0 or 1");
  }
  const auto mask = static_cast<std::uint8_t>(1u << plane);
  return static_cast<std::uint8_t>(bit ? (pixel | mask) : (pixel & ~mask));
}

BitMessage pack_bits(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int shift = 7; shift >= 0; --shift) {
      bits.push_back((byte >> shift) & 1u);
    }
  }
  return BitMessage(std::move(bits));
}

UnpackedBytes unpack_bits(const BitMessage& message) {
  UnpackedBytes out;
  out.bit_length = message.size();
  out.bytes.assign((message.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (message[i]) {
      out.bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }
  }
  return out;
}

}  // namespace bpistego
