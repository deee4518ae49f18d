#include "bpistego/selection.hpp"

#include <numeric>
#include <utility>

#include "bpistego/error.hpp"

namespace bpistego {

XorshiftDraw xorshift64star_next(std::uint64_t state) {
  if (state == 0) throw InvalidArgument("xorshift64* state must be nonzero");
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return {state * kXorshiftMultiplier, state};
}

std::uint64_t Xorshift64Star::next() noexcept {
  // state_ is never zero: the constructor remaps it and xorshift keeps a
  // nonzero state nonzero.
  const auto draw = xorshift64star_next(state_);
  state_ = draw.state;
  return draw.value;
}

std::vector<std::size_t> select_positions(SelectionKey key, std::size_t n,
                                          std::size_t m) {
  if (m > n) throw CapacityError(m, n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Xorshift64Star rng(key.seed);
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t j = rng.next() % (i + 1);
    std::swap(order[i], order[j]);
  }
  order.resize(m);
  return order;
}

}  // namespace bpistego
