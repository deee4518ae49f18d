#include "bpistego/steganalysis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "bpistego/error.hpp"

namespace bpistego {

Histogram histogram_of(std::span<const std::uint8_t> pixels) {
  Histogram h{};
  for (auto p : pixels) ++h[p];
  return h;
}

PovStatistic pov_statistic(const Histogram& histogram) {
  PovStatistic result;
  int retained = 0;
  for (std::size_t k = 0; k < 128; ++k) {
    const auto even = histogram[2 * k];
    const auto odd = histogram[2 * k + 1];
    if (even + odd < kPovMinPairCount) continue;
    const double expected = 0.5 * static_cast<double>(even + odd);
    const double diff = static_cast<double>(even) - expected;
    result.statistic += diff * diff / expected;
    ++retained;
  }
  if (retained < 2) {
    throw DegenerateHistogram("pairs-of-values test needs at least 2 pairs "
                              "with count >= " +
                              std::to_string(kPovMinPairCount) + ", found " +
                              std::to_string(retained));
  }
  result.df = retained - 1;
  return result;
}

double pov_probability(const Histogram& histogram) {
  const auto s = pov_statistic(histogram);
  return chi2_cdf_complement(s.statistic, s.df);
}

double PovCurve::mean_p_value() const noexcept {
  if (p_values.empty()) return 0.0;
  return std::accumulate(p_values.begin(), p_values.end(), 0.0) /
         static_cast<double>(p_values.size());
}

PovCurve pov_curve(const GrayImage& image, int steps) {
  if (steps < 1) throw InvalidArgument("PoV curve needs at least one step");
  const auto pixels = image.pixels();
  const std::size_t n = pixels.size();
  const auto total_steps = static_cast<std::size_t>(steps);

  PovCurve curve;
  curve.fractions.reserve(total_steps);
  curve.p_values.reserve(total_steps);

  // Prefixes grow monotonically, so the histogram is extended in place.
  Histogram h{};
  std::size_t counted = 0;
  for (std::size_t t = 1; t <= total_steps; ++t) {
    const std::size_t prefix = (t * n + total_steps - 1) / total_steps;
    for (; counted < prefix; ++counted) ++h[pixels[counted]];
    double p = 0.0;
    try {
      p = pov_probability(h);
    } catch (const DegenerateHistogram&) {
      p = 0.0;
    }
    curve.fractions.push_back(static_cast<double>(t) /
                              static_cast<double>(total_steps));
    curve.p_values.push_back(p);
  }
  return curve;
}

double clamp_estimate(double estimate) noexcept {
  return std::clamp(estimate, 0.0, 1.0);
}

double PlaneEstimate::clamped() const noexcept {
  return clamp_estimate(estimate);
}

PlaneEstimate mlsb_ws_estimate(const GrayImage& image, int plane) {
  if (plane != 0 && plane != 1) {
    throw InvalidArgument("MLSB-WS plane must be 0 or 1, got " +
                          std::to_string(plane));
  }
  const std::size_t w = image.width();
  const std::size_t h = image.height();
  if (w < 3 || h < 3) {
    throw InvalidArgument("weighted-stego analysis needs at least 3x3 pixels");
  }

  // Sum of (s - flip(s)) * (4s - neighbour sum); the 1/4 of the neighbour
  // mean is folded into the final scale so the sum stays exact.
  const int mask = 1 << plane;
  std::int64_t sum = 0;
  for (std::size_t y = 1; y + 1 < h; ++y) {
    for (std::size_t x = 1; x + 1 < w; ++x) {
      const int s = image.at(x, y);
      const int flipped_delta = (s & mask) ? mask : -mask;
      const int neighbours = image.at(x - 1, y) + image.at(x + 1, y) +
                             image.at(x, y - 1) + image.at(x, y + 1);
      sum += static_cast<std::int64_t>(flipped_delta) * (4 * s - neighbours);
    }
  }
  const double interior = static_cast<double>((w - 2) * (h - 2));
  const double scale = 4.0 * interior * static_cast<double>(mask * mask);
  return {plane, 2.0 * static_cast<double>(sum) / scale};
}

PlaneEstimate ws_estimate(const GrayImage& image) {
  return mlsb_ws_estimate(image, 0);
}

}  // namespace bpistego
