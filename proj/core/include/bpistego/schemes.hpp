#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bpistego/bits.hpp"
#include "bpistego/image.hpp"

namespace bpistego {

enum class SchemeId {
  kLsb,     // random-position LSB replacement
  kTwoLsb,  // two secret bits per pixel in planes 0 and 1
  kBpi,     // bitplane-index scheme
};

/// "lsb", "2lsb" or "bpi".
std::string_view scheme_token(SchemeId scheme) noexcept;
std::optional<SchemeId> parse_scheme(std::string_view token) noexcept;

/// Bits a cover with `pixel_count` pixels can carry under `scheme`.
std::size_t capacity_bits(SchemeId scheme, std::size_t pixel_count) noexcept;

/// Pixels occupied by a payload of `bit_count` bits under `scheme`.
std::size_t pixels_needed(SchemeId scheme, std::size_t bit_count) noexcept;

/// Maps the two least significant bits 11 -> 01 and 00 -> 10; 01 and 10 are
/// left alone. The upper six bits never change.
std::uint8_t preprocess_2lsbs(std::uint8_t pixel) noexcept;

/// Run-length form of the alternating plane-index vector. Expanded, it reads
/// first, 1-first, first, ... for `length` entries.
class IndexVector {
 public:
  IndexVector() = default;
  IndexVector(int first_index, std::size_t length);

  int first_index() const noexcept { return first_index_; }
  std::size_t length() const noexcept { return length_; }

  int operator[](std::size_t i) const noexcept {
    return (i % 2 == 0) ? first_index_ : 1 - first_index_;
  }

  std::vector<int> expand() const;

  /// Number of repeated "10" / "01" pairs, ceil(length / 2).
  std::size_t pair_count() const noexcept { return (length_ + 1) / 2; }
  bool has_half_pair() const noexcept { return length_ % 2 == 1; }

  /// "n(10)" or "n(01)". Odd lengths get a trailing '~' marking that the
  /// final pair is cut short by one index.
  std::string compressed() const;
  static IndexVector parse_compressed(std::string_view text);

  friend bool operator==(const IndexVector&, const IndexVector&) = default;

 private:
  int first_index_ = 0;
  std::size_t length_ = 0;
};

struct BpiEmbedding {
  GrayImage stego;
  IndexVector index_vector;
};

// Position-explicit embedders and extractors. `positions` must be distinct
// and inside the image; they are visited in order.

GrayImage lsb_embed_at(const GrayImage& cover, const BitMessage& bits,
                       std::span<const std::size_t> positions);
BitMessage lsb_extract_at(const GrayImage& stego, std::size_t bit_length,
                          std::span<const std::size_t> positions);

/// Bit pair (2k, 2k+1) goes to planes (0, 1) of positions[k]; an odd final
/// bit occupies plane 0 alone.
GrayImage twolsb_embed_at(const GrayImage& cover, const BitMessage& bits,
                          std::span<const std::size_t> positions);
BitMessage twolsb_extract_at(const GrayImage& stego, std::size_t bit_length,
                             std::span<const std::size_t> positions);

BpiEmbedding bpi_embed_at(const GrayImage& cover, const BitMessage& bits,
                          std::span<const std::size_t> positions);
BitMessage bpi_extract_at(const GrayImage& stego,
                          const IndexVector& index_vector,
                          std::span<const std::size_t> positions);

/// Everything the receiver needs besides the stego image.
struct StegoKey {
  SchemeId scheme = SchemeId::kLsb;
  std::uint64_t seed = 0;
  std::size_t bit_length = 0;
  int first_index = 0;  // BPI only

  friend bool operator==(const StegoKey&, const StegoKey&) = default;
};

/// `scheme=<lsb|2lsb|bpi>;seed=<u64>;bits=<n>[;first=<0|1>]`, `first` only
/// for bpi.
std::string format_stego_key(const StegoKey& key);
StegoKey parse_stego_key(std::string_view text);

struct EmbedResult {
  GrayImage stego;
  StegoKey key;
};

/// Keyed embedding: positions come from select_positions(seed, n, needed).
/// Throws CapacityError when the message does not fit.
EmbedResult embed(const GrayImage& cover, const BitMessage& message,
                  SchemeId scheme, std::uint64_t seed);

/// Throws InconsistentKey when the key asks for more bits than the stego
/// can hold.
BitMessage extract(const GrayImage& stego, const StegoKey& key);

}  // namespace bpistego
