#pragma once

#include <string>

#include "bpistego/image.hpp"

namespace bpistego {

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;  // +infinity when mse == 0

  bool lossless() const noexcept { return mse == 0.0; }
};

/// Throws InvalidArgument on a dimension mismatch.
QualityReport psnr(const GrayImage& cover, const GrayImage& stego);

/// "inf" for the lossless sentinel, otherwise fixed with `decimals` places.
std::string format_psnr(double psnr_db, int decimals = 4);

}  // namespace bpistego
