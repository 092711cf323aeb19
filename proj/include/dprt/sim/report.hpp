#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dprt/common.hpp"

namespace dprt::sim {

// Cycle accounting of one simulated run. `total` always equals the sum of
// the phase entries.
struct CycleReport {
  std::string method;
  int n = 0;
  int bits = 0;
  int h = 0;  // 0 for the non-scalable architectures
  bool use_mem_in = false;
  Value total = 0;
  std::vector<std::pair<std::string, Value>> phases;

  Value phase(const std::string& name) const {
    for (const auto& [key, cycles] : phases) {
      if (key == name) return cycles;
    }
    throw std::invalid_argument("no such phase: " + name);
  }

  void check_consistent() const {
    Value sum = 0;
    for (const auto& [key, cycles] : phases) sum += cycles;
    internal_check(sum == total, "phase breakdown does not sum to total");
  }
};

}  // namespace dprt::sim
