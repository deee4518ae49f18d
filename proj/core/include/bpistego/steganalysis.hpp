#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bpistego/image.hpp"

namespace bpistego {

/// Upper tail of the chi-square distribution, Q(df/2, statistic/2).
/// Throws InvalidArgument for df < 1 or a negative statistic.
double chi2_cdf_complement(double statistic, int df);

/// Regularized upper incomplete gamma Q(a, x) for a > 0, x >= 0.
double regularized_gamma_q(double a, double x);

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram_of(std::span<const std::uint8_t> pixels);

/// Pairs whose combined count is below this are left out of the PoV test.
inline constexpr std::uint64_t kPovMinPairCount = 4;

struct PovStatistic {
  double statistic = 0.0;
  int df = 0;
};

/// Pairs-of-values chi-square statistic over (2k, 2k+1). Throws
/// DegenerateHistogram when fewer than two pairs qualify.
PovStatistic pov_statistic(const Histogram& histogram);

/// Embedding probability for one histogram: chi2_cdf_complement of the
/// pairs-of-values statistic.
double pov_probability(const Histogram& histogram);

struct PovCurve {
  std::vector<double> fractions;
  std::vector<double> p_values;

  double mean_p_value() const noexcept;
};

inline constexpr int kDefaultPovSteps = 100;

/// Embedding probability over growing row-major prefixes of the image, one
/// point per step. Prefixes with a degenerate histogram score 0.
PovCurve pov_curve(const GrayImage& image, int steps = kDefaultPovSteps);

struct PlaneEstimate {
  int plane = 0;  // 0 = first LSB
  double estimate = 0.0;

  /// Presentation value: negatives read as 0, anything above 1 as 1.
  double clamped() const noexcept;
};

double clamp_estimate(double estimate) noexcept;

/// Weighted-stego change-rate estimate for plane 0 (unweighted form with a
/// 4-neighbour mean predictor, interior pixels only). Needs a 3x3 image.
PlaneEstimate ws_estimate(const GrayImage& image);

/// Per-plane generalisation of ws_estimate. plane 0 matches ws_estimate
/// exactly.
PlaneEstimate mlsb_ws_estimate(const GrayImage& image, int plane);

}  // namespace bpistego
