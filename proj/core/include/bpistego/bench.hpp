#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bpistego/bits.hpp"
#include "bpistego/image.hpp"
#include "bpistego/schemes.hpp"
#include "bpistego/steganalysis.hpp"

namespace bpistego {

/// Secret bits from the xorshift64* stream, one bit (value mod 2) per draw.
BitMessage generate_message(std::uint64_t seed, std::size_t bit_count);

enum class CoverKind { kSmooth, kUniform };

std::optional<CoverKind> parse_cover_kind(std::string_view token) noexcept;
std::string_view cover_kind_token(CoverKind kind) noexcept;

/// Synthetic stand-in covers.
///
/// uniform: i.i.d. bytes (top byte of each draw).
/// smooth:  keyed linear gradient plus an integer perturbation in [-2, 2],
///          tone-stretched by 1.5 and clamped. The stretch leaves gaps in the
///          histogram the way contrast-adjusted photographs do, so the raw
///          cover does not look LSB-equalised to the pairs-of-values test.
///          Perturbation amplitude after stretching is at most 3.
GrayImage synth_cover(CoverKind kind, std::size_t width, std::size_t height,
                      std::uint64_t seed);

struct SyntheticCovers {
  CoverKind kind = CoverKind::kSmooth;
  std::size_t count = 10;
  std::size_t width = 256;
  std::size_t height = 256;
  std::uint64_t first_seed = 1;
};

struct ExperimentConfig {
  std::vector<std::filesystem::path> cover_paths;
  std::optional<SyntheticCovers> synthetic;
  std::vector<double> rates{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::vector<SchemeId> schemes{SchemeId::kLsb, SchemeId::kTwoLsb,
                                SchemeId::kBpi};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  int steps = kDefaultPovSteps;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ResultRow {
  std::string cover_id;
  SchemeId scheme = SchemeId::kLsb;
  double rate = 0.0;
  std::uint64_t seed = 0;
  double ws_plane1 = 0.0;
  double ws_plane2 = 0.0;
  double pov_mean_pvalue = 0.0;
  double psnr_db = 0.0;
};

/// Embeds round(rate * n) bits for every cover x scheme x rate x seed cell
/// and scores the stego. Message bits are seeded with `seed`, positions with
/// `~seed`. Rate 0 rows score the raw cover. Rows come back ordered by
/// (cover, scheme, rate, seed) regardless of thread scheduling.
///
/// Every stego is extracted and compared with its message before it is
/// scored; a mismatch throws std::logic_error.
std::vector<ResultRow> run_grid(const ExperimentConfig& config);

/// Scores one cover/stego pair.
ResultRow score_stego(const GrayImage& cover, const GrayImage& stego,
                      int steps);

/// One row per (cover, scheme, rate) holding the average over seeds; `seed`
/// is set to the number of rows averaged.
std::vector<ResultRow> average_over_seeds(const std::vector<ResultRow>& rows);

/// Header `cover,scheme,rate,ws_L1,ws_L2,pov_mean_p,psnr_db,ws_L1_clamped,
/// ws_L2_clamped`; reals with four decimals, infinite PSNR as `inf`.
std::string emit_csv(const std::vector<ResultRow>& rows);

/// `fraction,p_value` rendering of a PoV curve.
std::string emit_pov_csv(const PovCurve& curve);

struct TrendCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Trend checks on averaged grid rows (the WS, MLSB-WS and PoV shapes).
/// Checks whose rows are absent from the grid are skipped.
std::vector<TrendCheck> check_trends(const std::vector<ResultRow>& rows);

}  // namespace bpistego
