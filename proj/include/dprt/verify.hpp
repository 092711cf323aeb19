#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dprt/core.hpp"

namespace dprt {

enum class HPolicy { all, front };

struct VerifyOptions {
  std::vector<int> sides;
  int bits = 8;
  HPolicy policy = HPolicy::front;
  int images = 3;                  // random images per configuration
  std::uint64_t seed = 0x1337c0de;
  int sim_side_limit = 31;         // simulate architectures for N <= limit
  bool inject_fault = false;       // negative-control hook: corrupts one check
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

// Cross-module invariants on random images: exact roundtrip, strip
// equivalence for the selected strip heights, simulator output equivalence
// and cycle-formula equality. Deterministic for a fixed seed.
VerifyResult run_verification(const VerifyOptions& options);

// Deterministic random image with pixels uniform in [0, 2^bits).
Image random_image(int side, int bits, std::uint64_t seed);

// Strip heights selected by a policy: `front` means the Pareto front plus
// H = 2 and H = N; `all` means every H in [2, N].
std::vector<int> strip_heights(int side, HPolicy policy);

}  // namespace dprt
