#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "bpistego/bench.hpp"
#include "bpistego/error.hpp"
#include "bpistego/metrics.hpp"
#include "bpistego/schemes.hpp"
#include "bpistego/selection.hpp"

using namespace bpistego;

namespace {

GrayImage random_image(std::mt19937_64& rng, std::size_t w, std::size_t h) {
  std::vector<std::uint8_t> px(w * h);
  for (auto& p : px) p = static_cast<std::uint8_t>(rng());
  return GrayImage(w, h, std::move(px));
}

BitMessage random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return BitMessage(std::move(bits));
}

std::vector<std::size_t> sequential(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

TEST_CASE("preprocess_2lsbs follows the 2LSB mapping") {
  CHECK(preprocess_2lsbs(7) == 5);
  CHECK(preprocess_2lsbs(4) == 6);
  CHECK(preprocess_2lsbs(5) == 5);
  CHECK(preprocess_2lsbs(6) == 6);
  CHECK(preprocess_2lsbs(0) == 2);
  CHECK(preprocess_2lsbs(255) == 253);
}

TEST_CASE("preprocess_2lsbs post-state (exhaustive)") {
  for (int p = 0; p < 256; ++p) {
    const int q = preprocess_2lsbs(static_cast<std::uint8_t>(p));
    REQUIRE((q % 4 == 1 || q % 4 == 2));
    REQUIRE((q >> 2) == (p >> 2));
    const int delta = std::abs(q - p);
    REQUIRE((delta == 0 || delta == 2));
  }
}

TEST_CASE("BPI worked example") {
  const GrayImage cover(4, 1, {1, 1, 2, 2});  // 2LSBs 01 01 10 10
  const auto result =
      bpi_embed_at(cover, BitMessage({0, 0, 1, 0}), sequential(4));
  CHECK(result.stego == GrayImage(4, 1, {1, 2, 2, 2}));  // 01 10 10 10
  CHECK(result.index_vector.first_index() == 1);
  CHECK(result.index_vector.length() == 4);
  CHECK(result.index_vector.expand() == std::vector<int>{1, 0, 1, 0});
  CHECK(result.index_vector.compressed() == "2(10)");

  CHECK(bpi_extract_at(result.stego, IndexVector(1, 4), sequential(4)) ==
        BitMessage({0, 0, 1, 0}));
}

TEST_CASE("BPI first bit uses its natural plane") {
  const auto result = bpi_embed_at(GrayImage(1, 1, {1}), BitMessage({1}),
                                   sequential(1));
  CHECK(result.index_vector.first_index() == 0);
  CHECK(result.stego[0] == 1);
}

TEST_CASE("BPI extraction of an empty vector") {
  CHECK(bpi_extract_at(GrayImage(2, 2), IndexVector(0, 0), {}).empty());
}

TEST_CASE("IndexVector compressed form") {
  CHECK(IndexVector(0, 6).compressed() == "3(01)");
  CHECK(IndexVector(1, 5).compressed() == "3(10)~");
  CHECK(IndexVector(0, 0).compressed() == "0(01)");
  for (std::size_t len = 0; len < 64; ++len) {
    for (int first = 0; first < 2; ++first) {
      const IndexVector v(first, len);
      REQUIRE(IndexVector::parse_compressed(v.compressed()) == v);
      const auto expanded = v.expand();
      for (std::size_t i = 1; i < expanded.size(); ++i) {
        REQUIRE(expanded[i] == 1 - expanded[i - 1]);
      }
    }
  }
  CHECK_THROWS_AS(IndexVector::parse_compressed("2(11)"), ParseError);
  CHECK_THROWS_AS(IndexVector::parse_compressed("(10)"), ParseError);
  CHECK_THROWS_AS(IndexVector::parse_compressed("0(10)~"), ParseError);
  CHECK_THROWS_AS(IndexVector(2, 3), InvalidArgument);
}

TEST_CASE("LSB baseline") {
  CHECK(lsb_embed_at(GrayImage(1, 1, {4}), BitMessage({1}), sequential(1))[0] ==
        5);
  CHECK(lsb_embed_at(GrayImage(1, 1, {5}), BitMessage({1}), sequential(1))[0] ==
        5);
}

TEST_CASE("2LSB baseline") {
  CHECK(twolsb_embed_at(GrayImage(1, 1, {4}), BitMessage({1, 1}),
                        sequential(1))[0] == 7);
  CHECK(twolsb_embed_at(GrayImage(1, 1, {7}), BitMessage({1, 1}),
                        sequential(1))[0] == 7);
  // first bit of the pair goes to plane 0
  CHECK(twolsb_embed_at(GrayImage(1, 1, {0}), BitMessage({1, 0}),
                        sequential(1))[0] == 1);
  // odd tail occupies plane 0 only
  const auto s = twolsb_embed_at(GrayImage(2, 1, {0, 2}),
                                 BitMessage({0, 1, 1}), sequential(2));
  CHECK(s == GrayImage(2, 1, {2, 3}));
  CHECK(twolsb_extract_at(s, 3, sequential(2)) == BitMessage({0, 1, 1}));
}

TEST_CASE("position-explicit schemes reject bad positions") {
  const GrayImage img(2, 2);
  CHECK_THROWS_AS(lsb_embed_at(img, BitMessage({1, 0}), sequential(1)),
                  InvalidArgument);
  const std::vector<std::size_t> outside{4};
  CHECK_THROWS_AS(lsb_embed_at(img, BitMessage({1}), outside), InvalidArgument);
  CHECK_THROWS_AS(bpi_embed_at(img, BitMessage({1}), outside), InvalidArgument);
  CHECK_THROWS_AS(twolsb_embed_at(img, BitMessage({1, 1, 1}), sequential(1)),
                  InvalidArgument);
  CHECK_THROWS_AS(bpi_extract_at(img, IndexVector(0, 3), sequential(2)),
                  InvalidArgument);
  CHECK_THROWS_AS(lsb_extract_at(img, 2, outside), InvalidArgument);
}

TEST_CASE("position-explicit round trips and stego properties (randomised)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto cover = random_image(rng, 1 + rng() % 24, 1 + rng() % 24);
    const std::size_t n = cover.size();
    const std::size_t m = rng() % (n + 1);
    const auto positions = select_positions({rng()}, n, m);
    const auto bits = random_bits(rng, m);

    const auto lsb = lsb_embed_at(cover, bits, positions);
    REQUIRE(lsb_extract_at(lsb, m, positions) == bits);

    const auto bpi = bpi_embed_at(cover, bits, positions);
    REQUIRE(bpi_extract_at(bpi.stego, bpi.index_vector, positions) == bits);
    REQUIRE(IndexVector::parse_compressed(bpi.index_vector.compressed()) ==
            bpi.index_vector);

    const std::size_t bits2 = rng() % (2 * n + 1);
    const auto pos2 = select_positions({rng()}, n, (bits2 + 1) / 2);
    const auto msg2 = random_bits(rng, bits2);
    const auto two = twolsb_embed_at(cover, msg2, pos2);
    REQUIRE(twolsb_extract_at(two, bits2, pos2) == msg2);

    std::set<std::size_t> selected(positions.begin(), positions.end());
    std::set<std::size_t> selected2(pos2.begin(), pos2.end());
    for (std::size_t j = 0; j < n; ++j) {
      const int c = cover[j];
      const bool in = selected.count(j) > 0;
      REQUIRE(std::abs(lsb[j] - c) <= 1);
      REQUIRE(std::abs(bpi.stego[j] - c) <= 2);
      REQUIRE(std::abs(two[j] - c) <= 3);
      if (!in) {
        REQUIRE(lsb[j] == c);
        REQUIRE(bpi.stego[j] == c);
      } else {
        REQUIRE((bpi.stego[j] % 4 == 1 || bpi.stego[j] % 4 == 2));
      }
      if (selected2.count(j) == 0) REQUIRE(two[j] == c);
    }
  }
}

TEST_CASE("BPI distortion: enumeration oracle and Monte-Carlo MSE") {
  // Oracle: each original 2LSB pattern (after the 2LSB mapping) either keeps
  // its pattern or is swapped, each with probability 1/2 for random
  // messages. Independent of the embedder.
  const int mapped[4] = {2, 1, 2, 1};  // 00->10, 01, 10, 11->01
  double oracle = 0.0;
  for (int orig = 0; orig < 4; ++orig) {
    for (int swap = 0; swap < 2; ++swap) {
      const int after = swap ? (mapped[orig] ^ 3) : mapped[orig];
      oracle += (after - orig) * (after - orig) / 8.0;
    }
  }
  CHECK(oracle == doctest::Approx(1.5));

  double total = 0.0;
  const int seeds = 10;
  for (int s = 1; s <= seeds; ++s) {
    const auto cover = synth_cover(CoverKind::kUniform, 512, 512, 100 + s);
    const auto msg = generate_message(200 + s, cover.size());
    const auto result = embed(cover, msg, SchemeId::kBpi, 300 + s);
    total += psnr(cover, result.stego).mse;
  }
  CHECK(std::fabs(total / seeds - oracle) <= 0.02);
}

TEST_CASE("keyed embed/extract round trip for all schemes") {
  std::mt19937_64 rng(21);
  for (auto scheme : {SchemeId::kLsb, SchemeId::kTwoLsb, SchemeId::kBpi}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto cover = random_image(rng, 1 + rng() % 30, 1 + rng() % 30);
      const std::size_t cap = capacity_bits(scheme, cover.size());
      const auto msg = random_bits(rng, rng() % (cap + 1));
      const auto result = embed(cover, msg, scheme, rng());
      REQUIRE(result.key.bit_length == msg.size());
      REQUIRE(result.key.scheme == scheme);
      REQUIRE(extract(result.stego, result.key) == msg);
      REQUIRE(parse_stego_key(format_stego_key(result.key)) == result.key);
    }
  }
}

TEST_CASE("capacity") {
  const GrayImage cover(4, 4);
  CHECK_THROWS_AS(embed(cover, BitMessage(std::vector<std::uint8_t>(17, 1)),
                        SchemeId::kLsb, 1),
                  CapacityError);
  CHECK_THROWS_AS(embed(cover, BitMessage(std::vector<std::uint8_t>(17, 1)),
                        SchemeId::kBpi, 1),
                  CapacityError);
  CHECK_NOTHROW(embed(cover, BitMessage(std::vector<std::uint8_t>(32, 1)),
                      SchemeId::kTwoLsb, 1));
  try {
    embed(cover, BitMessage(std::vector<std::uint8_t>(33, 1)),
          SchemeId::kTwoLsb, 1);
    FAIL("expected capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()) == "payload 33 bits exceeds capacity 32");
    CHECK(e.available() == 32);
  }
  // BPI carries exactly as much as LSB for the same pixel budget.
  for (std::size_t n : {1u, 17u, 4096u}) {
    CHECK(capacity_bits(SchemeId::kBpi, n) == capacity_bits(SchemeId::kLsb, n));
    CHECK(pixels_needed(SchemeId::kBpi, n) == pixels_needed(SchemeId::kLsb, n));
  }
}

TEST_CASE("empty message leaves the cover untouched") {
  std::mt19937_64 rng(5);
  const auto cover = random_image(rng, 8, 8);
  for (auto scheme : {SchemeId::kLsb, SchemeId::kTwoLsb, SchemeId::kBpi}) {
    const auto r = embed(cover, BitMessage{}, scheme, 9);
    CHECK(r.stego == cover);
    CHECK(r.key.bit_length == 0);
  }
}

TEST_CASE("extract rejects keys larger than the stego") {
  const GrayImage stego(4, 4);
  CHECK_THROWS_AS(extract(stego, StegoKey{SchemeId::kLsb, 1, 17, 0}),
                  InconsistentKey);
  CHECK_THROWS_AS(extract(stego, StegoKey{SchemeId::kTwoLsb, 1, 33, 0}),
                  InconsistentKey);
  CHECK(extract(stego, StegoKey{SchemeId::kBpi, 1, 0, 1}).empty());
}

TEST_CASE("stego key text form") {
  const StegoKey bpi{SchemeId::kBpi, 18446744073709551615ULL, 1000, 1};
  CHECK(format_stego_key(bpi) ==
        "scheme=bpi;seed=18446744073709551615;bits=1000;first=1");
  CHECK(format_stego_key(StegoKey{SchemeId::kTwoLsb, 3, 7, 0}) ==
        "scheme=2lsb;seed=3;bits=7");
  CHECK(parse_stego_key("scheme=lsb;seed=5;bits=9\n") ==
        StegoKey{SchemeId::kLsb, 5, 9, 0});

  CHECK_THROWS_AS(parse_stego_key("scheme=dct;seed=5;bits=9"), ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=lsb;seed=5"), ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=lsb;seed=-5;bits=9"), ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=lsb;seed=5;bits=9;first=0"),
                  ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=bpi;seed=5;bits=9"), ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=bpi;seed=5;bits=9;first=2"),
                  ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=lsb;seed=5;bits=9;bits=9"),
                  ParseError);
  CHECK_THROWS_AS(parse_stego_key("scheme=lsb;seed=5;bits=9;extra=1"),
                  ParseError);
}

TEST_CASE("scheme tokens") {
  for (auto s : {SchemeId::kLsb, SchemeId::kTwoLsb, SchemeId::kBpi}) {
    CHECK(parse_scheme(scheme_token(s)) == s);
  }
  CHECK_FALSE(parse_scheme("LSB").has_value());
}
