#include "bpistego/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>

#include "bpistego/error.hpp"

namespace bpistego {

QualityReport psnr(const GrayImage& cover, const GrayImage& stego) {
  if (cover.width() != stego.width() || cover.height() != stego.height()) {
    throw InvalidArgument("PSNR needs images of identical dimensions");
  }
  const auto a = cover.pixels();
  const auto b = stego.pixels();
  std::uint64_t squared = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
    squared += static_cast<std::uint64_t>(d * d);
  }
  QualityReport report;
  report.mse = static_cast<double>(squared) / static_cast<double>(a.size());
  report.psnr_db = squared == 0
                       ? std::numeric_limits<double>::infinity()
                       : 10.0 * std::log10(255.0 * 255.0 / report.mse);
  return report;
}

std::string format_psnr(double psnr_db, int decimals) {
  if (std::isinf(psnr_db) && psnr_db > 0) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, psnr_db);
  return buf;
}

}  // namespace bpistego
