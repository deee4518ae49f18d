#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bpistego {

/// State used in place of a zero seed (xorshift state must be nonzero).
inline constexpr std::uint64_t kZeroSeedState = 0x9E3779B97F4A7C15ULL;
inline constexpr std::uint64_t kXorshiftMultiplier = 0x2545F4914F6CDD1DULL;

struct XorshiftDraw {
  std::uint64_t value;
  std::uint64_t state;
};

/// One xorshift64* step. Throws InvalidArgument for a zero state.
XorshiftDraw xorshift64star_next(std::uint64_t state);

/// Stateful wrapper over xorshift64star_next. A zero seed is remapped to
/// kZeroSeedState.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) noexcept
      : state_(seed != 0 ? seed : kZeroSeedState) {}

  std::uint64_t next() noexcept;
  std::uint64_t state() const noexcept { return state_; }

 private:
  std::uint64_t state_;
};

struct SelectionKey {
  std::uint64_t seed = 0;
};

/// First `m` entries of a keyed Fisher-Yates shuffle of [0, n). The shuffle
/// walks i = n-1 .. 1 and swaps slot i with slot (draw mod (i+1)), so every
/// call with the same key and n yields the same full permutation and shorter
/// requests are prefixes of longer ones.
///
/// Throws CapacityError when m > n.
std::vector<std::size_t> select_positions(SelectionKey key, std::size_t n,
                                          std::size_t m);

}  // namespace bpistego
