#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "bpistego/image.hpp"

namespace bpistego {

// Binary PGM (P5), maxval 255 only. Header comments are accepted on load
// and never written.

GrayImage load_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> save_pgm(const GrayImage& image);

GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& image);

}  // namespace bpistego
