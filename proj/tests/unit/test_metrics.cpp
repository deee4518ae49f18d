#include <doctest.h>

#include <cmath>
#include <random>

#include "bpistego/bench.hpp"
#include "bpistego/error.hpp"
#include "bpistego/metrics.hpp"
#include "bpistego/schemes.hpp"

using namespace bpistego;

TEST_CASE("identical images are lossless") {
  const GrayImage img(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  const auto r = psnr(img, img);
  CHECK(r.mse == 0.0);
  CHECK(r.lossless());
  CHECK(std::isinf(r.psnr_db));
  CHECK(format_psnr(r.psnr_db) == "inf");
}

TEST_CASE("full-scale difference is 0 dB") {
  const auto r = psnr(GrayImage(1, 1, {0}), GrayImage(1, 1, {255}));
  CHECK(r.mse == 255.0 * 255.0);
  CHECK(r.psnr_db == 0.0);
  CHECK(format_psnr(r.psnr_db) == "0.0000");
}

TEST_CASE("psnr is symmetric and strictly monotone") {
  std::mt19937_64 rng(2);
  std::vector<std::uint8_t> a(100), b(100);
  for (std::size_t i = 0; i < 100; ++i) {
    a[i] = static_cast<std::uint8_t>(100 + rng() % 50);
    b[i] = static_cast<std::uint8_t>(100 + rng() % 50);
  }
  const GrayImage ia(10, 10, a), ib(10, 10, b);
  CHECK(psnr(ia, ib).psnr_db == psnr(ib, ia).psnr_db);

  for (std::size_t i = 0; i < 100; i += 7) {
    auto worse = b;
    worse[i] = a[i] >= b[i] ? static_cast<std::uint8_t>(b[i] - 1)
                            : static_cast<std::uint8_t>(b[i] + 1);
    REQUIRE(psnr(ia, GrayImage(10, 10, worse)).psnr_db <
            psnr(ia, ib).psnr_db);
  }
}

TEST_CASE("psnr rejects mismatched dimensions") {
  CHECK_THROWS_AS(psnr(GrayImage(2, 3), GrayImage(3, 2)), InvalidArgument);
}

TEST_CASE("LSB at rate 1 on uniform covers approaches mse 0.5") {
  // E[(c0 - r)^2] = 1/2 for a uniform LSB c0 and uniform bit r.
  const double expected_db = 10.0 * std::log10(255.0 * 255.0 / 0.5);
  CHECK(expected_db == doctest::Approx(51.1411).epsilon(1e-5));
  double sum = 0.0;
  for (int s = 1; s <= 3; ++s) {
    const auto cover = synth_cover(CoverKind::kUniform, 512, 512, s);
    const auto msg = generate_message(1000 + s, cover.size());
    sum += psnr(cover, embed(cover, msg, SchemeId::kLsb, s).stego).psnr_db;
  }
  CHECK(std::fabs(sum / 3 - expected_db) <= 0.05);
}
