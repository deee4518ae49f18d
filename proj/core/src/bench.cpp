#include "bpistego/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "bpistego/error.hpp"
#include "bpistego/metrics.hpp"
#include "bpistego/pgm.hpp"
#include "bpistego/selection.hpp"

namespace bpistego {
namespace {

struct NamedCover {
  std::string id;
  GrayImage image;
};

std::vector<NamedCover> load_covers(const ExperimentConfig& config) {
  std::vector<NamedCover> covers;
  for (const auto& path : config.cover_paths) {
    covers.push_back({path.stem().string(), read_pgm_file(path)});
  }
  if (config.synthetic) {
    const auto& s = *config.synthetic;
    for (std::size_t i = 0; i < s.count; ++i) {
      char id[64];
      std::snprintf(id, sizeof id, "%s-%02zu",
                    std::string(cover_kind_token(s.kind)).c_str(), i + 1);
      covers.push_back(
          {id, synth_cover(s.kind, s.width, s.height, s.first_seed + i)});
    }
  }
  return covers;
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string out = buf;
  if (out == "-0.0000") out = "0.0000";
  return out;
}

struct Cell {
  std::size_t cover;
  std::size_t scheme;
  std::size_t rate;
  std::size_t seed;
};

}  // namespace

BitMessage generate_message(std::uint64_t seed, std::size_t bit_count) {
  Xorshift64Star rng(seed);
  std::vector<std::uint8_t> bits(bit_count);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1u);
  return BitMessage(std::move(bits));
}

std::optional<CoverKind> parse_cover_kind(std::string_view token) noexcept {
  if (token == "smooth") return CoverKind::kSmooth;
  if (token == "uniform") return CoverKind::kUniform;
  return std::nullopt;
}

std::string_view cover_kind_token(CoverKind kind) noexcept {
  return kind == CoverKind::kSmooth ? "smooth" : "uniform";
}

GrayImage synth_cover(CoverKind kind, std::size_t width, std::size_t height,
                      std::uint64_t seed) {
  GrayImage image(width, height);
  Xorshift64Star rng(seed);
  if (kind == CoverKind::kUniform) {
    for (auto& px : image.pixels()) px = static_cast<std::uint8_t>(rng.next() >> 56);
    return image;
  }

  auto unit = [&rng] { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; };
  // Each axis spans 25..74 grey levels before the 1.5x stretch, so the
  // stretched gradient stays below 255.
  const double offset = 10.0 + 10.0 * unit();
  const double span_x = 25.0 + 49.0 * unit();
  const double span_y = 25.0 + 49.0 * unit();
  const double slope_x = width > 1 ? span_x / static_cast<double>(width - 1) : 0.0;
  const double slope_y = height > 1 ? span_y / static_cast<double>(height - 1) : 0.0;

  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double gradient = offset + slope_x * static_cast<double>(x) +
                              slope_y * static_cast<double>(y);
      const auto perturbation = static_cast<int>(rng.next() % 5) - 2;
      const double level = std::floor(gradient + 0.5) + perturbation;
      const double stretched = std::floor(1.5 * level + 0.5);
      image[y * width + x] =
          static_cast<std::uint8_t>(std::clamp(stretched, 0.0, 255.0));
    }
  }
  return image;
}

ResultRow score_stego(const GrayImage& cover, const GrayImage& stego,
                      int steps) {
  ResultRow row;
  row.ws_plane1 = mlsb_ws_estimate(stego, 0).estimate;
  row.ws_plane2 = mlsb_ws_estimate(stego, 1).estimate;
  row.pov_mean_pvalue = pov_curve(stego, steps).mean_p_value();
  row.psnr_db = psnr(cover, stego).psnr_db;
  return row;
}

std::vector<ResultRow> run_grid(const ExperimentConfig& config) {
  if (config.rates.empty()) throw InvalidArgument("no embedding rates given");
  for (double r : config.rates) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw InvalidArgument("embedding rate must be in [0, 1]");
    }
  }
  if (config.schemes.empty()) throw InvalidArgument("no schemes given");
  if (config.seeds.empty()) throw InvalidArgument("no seeds given");

  const auto covers = load_covers(config);
  if (covers.empty()) throw InvalidArgument("empty cover set");

  std::vector<Cell> cells;
  for (std::size_t c = 0; c < covers.size(); ++c)
    for (std::size_t s = 0; s < config.schemes.size(); ++s)
      for (std::size_t r = 0; r < config.rates.size(); ++r)
        for (std::size_t k = 0; k < config.seeds.size(); ++k)
          cells.push_back({c, s, r, k});

  std::vector<ResultRow> rows(cells.size());
  auto run_cell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    const auto& cover = covers[cell.cover].image;
    const SchemeId scheme = config.schemes[cell.scheme];
    const double rate = config.rates[cell.rate];
    const std::uint64_t seed = config.seeds[cell.seed];

    const auto bit_count = static_cast<std::size_t>(
        std::llround(rate * static_cast<double>(cover.size())));
    ResultRow row;
    if (bit_count == 0) {
      row = score_stego(cover, cover, config.steps);
    } else {
      const auto message = generate_message(seed, bit_count);
      const auto result = embed(cover, message, scheme, ~seed);
      if (extract(result.stego, result.key) != message) {
        throw std::logic_error("round-trip failed for " +
                               covers[cell.cover].id + " " +
                               std::string(scheme_token(scheme)));
      }
      row = score_stego(cover, result.stego, config.steps);
    }
    row.cover_id = covers[cell.cover].id;
    row.scheme = scheme;
    row.rate = rate;
    row.seed = seed;
    rows[index] = std::move(row);
  };

  unsigned workers = config.threads != 0 ? config.threads
                                         : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1,
                                 static_cast<unsigned>(cells.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
          try {
            run_cell(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = cells.size();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<ResultRow> average_over_seeds(const std::vector<ResultRow>& rows) {
  std::vector<ResultRow> out;
  for (const auto& row : rows) {
    const bool same_cell = !out.empty() && out.back().cover_id == row.cover_id &&
                           out.back().scheme == row.scheme &&
                           out.back().rate == row.rate;
    if (!same_cell) {
      out.push_back(row);
      out.back().seed = 1;
      continue;
    }
    auto& acc = out.back();
    acc.ws_plane1 += row.ws_plane1;
    acc.ws_plane2 += row.ws_plane2;
    acc.pov_mean_pvalue += row.pov_mean_pvalue;
    acc.psnr_db += row.psnr_db;  // inf stays inf
    ++acc.seed;
  }
  for (auto& acc : out) {
    const auto n = static_cast<double>(acc.seed);
    acc.ws_plane1 /= n;
    acc.ws_plane2 /= n;
    acc.pov_mean_pvalue /= n;
    acc.psnr_db /= n;
  }
  return out;
}

std::string emit_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "cover,scheme,rate,ws_L1,ws_L2,pov_mean_p,psnr_db,ws_L1_clamped,"
      "ws_L2_clamped\n";
  for (const auto& row : rows) {
    out += row.cover_id;
    out += ',';
    out += scheme_token(row.scheme);
    out += ',' + fixed4(row.rate);
    out += ',' + fixed4(row.ws_plane1);
    out += ',' + fixed4(row.ws_plane2);
    out += ',' + fixed4(row.pov_mean_pvalue);
    out += ',' + format_psnr(row.psnr_db, 4);
    out += ',' + fixed4(clamp_estimate(row.ws_plane1));
    out += ',' + fixed4(clamp_estimate(row.ws_plane2));
    out += '\n';
  }
  return out;
}

std::string emit_pov_csv(const PovCurve& curve) {
  std::string out = "fraction,p_value\n";
  for (std::size_t i = 0; i < curve.fractions.size(); ++i) {
    out += fixed4(curve.fractions[i]) + ',' + fixed4(curve.p_values[i]) + '\n';
  }
  return out;
}

std::vector<TrendCheck> check_trends(const std::vector<ResultRow>& rows) {
  // Mean per (scheme, rate) over every cover and seed.
  struct Acc {
    double ws1 = 0, ws2 = 0, pov = 0;
    int n = 0;
  };
  std::map<std::pair<SchemeId, long>, Acc> cells;
  auto rate_key = [](double r) { return std::lround(r * 1000.0); };
  for (const auto& row : rows) {
    auto& a = cells[{row.scheme, rate_key(row.rate)}];
    a.ws1 += row.ws_plane1;
    a.ws2 += row.ws_plane2;
    a.pov += row.pov_mean_pvalue;
    ++a.n;
  }
  auto mean = [&](SchemeId s, double rate) -> std::optional<Acc> {
    auto it = cells.find({s, rate_key(rate)});
    if (it == cells.end()) return std::nullopt;
    Acc a = it->second;
    a.ws1 /= a.n;
    a.ws2 /= a.n;
    a.pov /= a.n;
    return a;
  };

  std::vector<TrendCheck> checks;
  auto add = [&](std::string name, bool ok, double value) {
    checks.push_back({std::move(name), ok, "value " + fixed4(value)});
  };
  const double rates[] = {0.2, 0.4, 0.6, 0.8, 1.0};

  if (auto cover = mean(SchemeId::kLsb, 0.0)) {
    add("WS raw cover |estimate| < 0.05", std::fabs(cover->ws1) < 0.05,
        cover->ws1);
    add("PoV raw cover mean p < 0.1", cover->pov < 0.1, cover->pov);
  }
  for (double p : rates) {
    const std::string tag = " p=" + fixed4(p).substr(0, 3);
    if (auto a = mean(SchemeId::kLsb, p)) {
      add("WS on LSB within p+-0.1" + tag, std::fabs(a->ws1 - p) <= 0.1, a->ws1);
    }
    if (auto a = mean(SchemeId::kBpi, p)) {
      add("WS on BPI within -p+-0.15" + tag, std::fabs(a->ws1 + p) <= 0.15,
          a->ws1);
      add("WS on BPI clamps to 0" + tag, clamp_estimate(a->ws1) == 0.0, a->ws1);
    }
    if (auto a = mean(SchemeId::kTwoLsb, p)) {
      add("MLSB-WS L=1 on 2LSB within p/2+-0.1" + tag,
          std::fabs(a->ws1 - p / 2) <= 0.1, a->ws1);
      add("MLSB-WS L=2 on 2LSB within p/2+-0.1" + tag,
          std::fabs(a->ws2 - p / 2) <= 0.1, a->ws2);
    }
  }
  if (auto a = mean(SchemeId::kBpi, 1.0)) {
    add("MLSB-WS L=2 on BPI p=1.0 in [0.8, 1.2]", a->ws2 >= 0.8 && a->ws2 <= 1.2,
        a->ws2);
    add("PoV on BPI p=1.0 mean p < 0.1", a->pov < 0.1, a->pov);
  }
  for (double p : {0.2, 0.4, 0.6}) {
    if (auto a = mean(SchemeId::kBpi, p)) {
      add("MLSB-WS L=2 on BPI < 0.3 p=" + fixed4(p).substr(0, 3), a->ws2 < 0.3,
          a->ws2);
    }
  }
  if (auto a = mean(SchemeId::kLsb, 1.0)) {
    add("PoV on LSB p=1.0 mean p > 0.9", a->pov > 0.9, a->pov);
  }
  return checks;
}

}  // namespace bpistego
