#pragma once

#include <filesystem>
#include <optional>

#include "dprt/core.hpp"

namespace dprt::io {

// Reads a P2 (ASCII) or P5 (binary) PGM with a square, prime-sized raster.
// When `bits` is not given it defaults to ceil_log2(maxval + 1). P5 samples
// wider than 8 bits are big-endian 16-bit per the PNM convention.
Image read_pgm(const std::filesystem::path& path,
               std::optional<int> bits = std::nullopt);

// Writes a P5 PGM with maxval 2^bits - 1 (bits <= 16).
void write_pgm(const std::filesystem::path& path, const Image& img);

}  // namespace dprt::io
