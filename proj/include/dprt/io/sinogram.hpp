#pragma once

#include <filesystem>

#include "dprt/core.hpp"

namespace dprt::io {

// Sinogram file, text form:
//   DPRT v1 N=<N> B=<B>
// followed by N+1 lines of N comma-separated decimal values; line m holds
// R(m, 0..N-1). The binary form replaces "v1" with "v1b" and the value lines
// with little-endian fixed-width records of ceil((B + ceil_log2(N)) / 8)
// bytes each, row-major. Readers auto-detect the form.
void write_sinogram(const std::filesystem::path& path, const RadonArray& r,
                    bool binary = false);

RadonArray read_sinogram(const std::filesystem::path& path);

}  // namespace dprt::io
