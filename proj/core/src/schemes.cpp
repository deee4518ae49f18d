#include "bpistego/schemes.hpp"

#include <charconv>
#include <string>

#include "bpistego/error.hpp"
#include "bpistego/selection.hpp"

namespace bpistego {
namespace {

void check_positions(const GrayImage& image, std::size_t expected,
                     std::span<const std::size_t> positions) {
  if (positions.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) +
                          " positions, got " +
                          std::to_string(positions.size()));
  }
  for (std::size_t p : positions) {
    if (p >= image.size()) {
      throw InvalidArgument("position " + std::to_string(p) +
                            " outside image of " +
                            std::to_string(image.size()) + " pixels");
    }
  }
}

// 01 <-> 10; only called on preprocessed pixels.
std::uint8_t swap_2lsbs(std::uint8_t pixel) noexcept {
  return static_cast<std::uint8_t>(pixel ^ 0b11u);
}

}  // namespace

std::string_view scheme_token(SchemeId scheme) noexcept {
  switch (scheme) {
    case SchemeId::kLsb:
      return "lsb";
    case SchemeId::kTwoLsb:
      return "2lsb";
    case SchemeId::kBpi:
      return "bpi";
  }
  return "?";
}

std::optional<SchemeId> parse_scheme(std::string_view token) noexcept {
  if (token == "lsb") return SchemeId::kLsb;
  if (token == "2lsb") return SchemeId::kTwoLsb;
  if (token == "bpi") return SchemeId::kBpi;
  return std::nullopt;
}

std::size_t capacity_bits(SchemeId scheme, std::size_t pixel_count) noexcept {
  return scheme == SchemeId::kTwoLsb ? 2 * pixel_count : pixel_count;
}

std::size_t pixels_needed(SchemeId scheme, std::size_t bit_count) noexcept {
  return scheme == SchemeId::kTwoLsb ? (bit_count + 1) / 2 : bit_count;
}

std::uint8_t preprocess_2lsbs(std::uint8_t pixel) noexcept {
  switch (pixel & 0b11u) {
    case 0b11:
      return static_cast<std::uint8_t>(pixel - 2);
    case 0b00:
      return static_cast<std::uint8_t>(pixel + 2);
    default:
      return pixel;
  }
}

// ---------------------------------------------------------------------------
// IndexVector

IndexVector::IndexVector(int first_index, std::size_t length)
    : first_index_(first_index), length_(length) {
  if (first_index != 0 && first_index != 1) {
    throw InvalidArgument("first index must be 0 or 1");
  }
}

std::vector<int> IndexVector::expand() const {
  std::vector<int> out(length_);
  for (std::size_t i = 0; i < length_; ++i) out[i] = (*this)[i];
  return out;
}

std::string IndexVector::compressed() const {
  std::string out = std::to_string(pair_count());
  out += first_index_ == 1 ? "(10)" : "(01)";
  if (has_half_pair()) out += '~';
  return out;
}

IndexVector IndexVector::parse_compressed(std::string_view text) {
  std::size_t pairs = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, pairs);
  if (ec != std::errc{} || ptr == begin) {
    throw ParseError(ParseError::Kind::kMalformedKey,
                     "index vector: missing pair count");
  }
  std::string_view rest(ptr, static_cast<std::size_t>(end - ptr));
  const bool half = !rest.empty() && rest.back() == '~';
  if (half) rest.remove_suffix(1);
  int first = 0;
  if (rest == "(10)") {
    first = 1;
  } else if (rest != "(01)") {
    throw ParseError(ParseError::Kind::kMalformedKey,
                     "index vector: expected (10) or (01)");
  }
  if (half && pairs == 0) {
    throw ParseError(ParseError::Kind::kMalformedKey,
                     "index vector: half pair without pairs");
  }
  return IndexVector(first, half ? 2 * pairs - 1 : 2 * pairs);
}

// ---------------------------------------------------------------------------
// Position-explicit schemes

GrayImage lsb_embed_at(const GrayImage& cover, const BitMessage& bits,
                       std::span<const std::size_t> positions) {
  check_positions(cover, bits.size(), positions);
  GrayImage stego = cover;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto& px = stego[positions[i]];
    px = set_bit(px, 0, bits[i]);
  }
  return stego;
}

BitMessage lsb_extract_at(const GrayImage& stego, std::size_t bit_length,
                          std::span<const std::size_t> positions) {
  check_positions(stego, bit_length, positions);
  BitMessage out;
  out.reserve(bit_length);
  for (std::size_t p : positions) out.push_back(get_bit(stego[p], 0));
  return out;
}

GrayImage twolsb_embed_at(const GrayImage& cover, const BitMessage& bits,
                          std::span<const std::size_t> positions) {
  check_positions(cover, pixels_needed(SchemeId::kTwoLsb, bits.size()),
                  positions);
  GrayImage stego = cover;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto& px = stego[positions[i / 2]];
    px = set_bit(px, static_cast<int>(i % 2), bits[i]);
  }
  return stego;
}

BitMessage twolsb_extract_at(const GrayImage& stego, std::size_t bit_length,
                             std::span<const std::size_t> positions) {
  check_positions(stego, pixels_needed(SchemeId::kTwoLsb, bit_length),
                  positions);
  BitMessage out;
  out.reserve(bit_length);
  for (std::size_t i = 0; i < bit_length; ++i) {
    out.push_back(get_bit(stego[positions[i / 2]], static_cast<int>(i % 2)));
  }
  return out;
}

BpiEmbedding bpi_embed_at(const GrayImage& cover, const BitMessage& bits,
                          std::span<const std::size_t> positions) {
  check_positions(cover, bits.size(), positions);
  GrayImage stego = cover;
  int first = 0;
  int previous = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    auto& px = stego[positions[i]];
    px = preprocess_2lsbs(px);
    // The two LSBs now differ, so exactly one plane holds the secret bit.
    int index = (px & 1u) == bits[i] ? 0 : 1;
    if (i == 0) {
      first = index;
    } else if (index == previous) {
      px = swap_2lsbs(px);
      index = 1 - previous;
    }
    previous = index;
  }
  return {std::move(stego), IndexVector(first, bits.size())};
}

BitMessage bpi_extract_at(const GrayImage& stego,
                          const IndexVector& index_vector,
                          std::span<const std::size_t> positions) {
  check_positions(stego, index_vector.length(), positions);
  BitMessage out;
  out.reserve(index_vector.length());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    out.push_back(get_bit(stego[positions[i]], index_vector[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Keyed embedding

EmbedResult embed(const GrayImage& cover, const BitMessage& message,
                  SchemeId scheme, std::uint64_t seed) {
  const std::size_t capacity = capacity_bits(scheme, cover.size());
  if (message.size() > capacity) {
    throw CapacityError(message.size(), capacity);
  }
  const auto positions = select_positions(
      SelectionKey{seed}, cover.size(), pixels_needed(scheme, message.size()));

  StegoKey key{scheme, seed, message.size(), 0};
  switch (scheme) {
    case SchemeId::kLsb:
      return {lsb_embed_at(cover, message, positions), key};
    case SchemeId::kTwoLsb:
      return {twolsb_embed_at(cover, message, positions), key};
    case SchemeId::kBpi: {
      auto result = bpi_embed_at(cover, message, positions);
      key.first_index = result.index_vector.first_index();
      return {std::move(result.stego), key};
    }
  }
  throw InvalidArgument("unknown scheme");
}

BitMessage extract(const GrayImage& stego, const StegoKey& key) {
  const std::size_t capacity = capacity_bits(key.scheme, stego.size());
  if (key.bit_length > capacity) {
    throw InconsistentKey("key declares " + std::to_string(key.bit_length) +
                          " bits but the stego image holds at most " +
                          std::to_string(capacity));
  }
  const auto positions =
      select_positions(SelectionKey{key.seed}, stego.size(),
                       pixels_needed(key.scheme, key.bit_length));
  switch (key.scheme) {
    case SchemeId::kLsb:
      return lsb_extract_at(stego, key.bit_length, positions);
    case SchemeId::kTwoLsb:
      return twolsb_extract_at(stego, key.bit_length, positions);
    case SchemeId::kBpi:
      return bpi_extract_at(stego, IndexVector(key.first_index, key.bit_length),
                            positions);
  }
  throw InvalidArgument("unknown scheme");
}

}  // namespace bpistego
