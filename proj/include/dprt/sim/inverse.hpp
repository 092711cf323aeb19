#pragma once

#include "dprt/core.hpp"
#include "dprt/sim/core_array.hpp"
#include "dprt/sim/memory.hpp"
#include "dprt/sim/pipeline.hpp"
#include "dprt/sim/report.hpp"
#include "dprt/strip.hpp"

namespace dprt::sim {

// Bit widths of the inverse datapath for B-bit source pixels:
//   b_prime — sinogram coefficient width B + ceil_log2(N)
//   bo      — vertical tree / divider width, b_prime + ceil_log2(N+1)
//   bq      — SR width, b_prime + ceil_log2(N)
// For odd prime N the two ceilings coincide and bo = bq = B + 2*ceil_log2(N).
struct InverseDatapathWidths {
  int b_prime = 0;
  int bo = 0;
  int bq = 0;
};

InverseDatapathWidths inverse_widths(int n, int bits);

struct InverseRun {
  Image image;
  CycleReport report;
  std::vector<std::string> trace;
};

// Scalable inverse: sinogram rows 0..N-1 are processed in K strips of H rows
// behind circular right shifters and H-operand column trees; R(N,.) joins at
// the accumulate stage while the last strip streams, and the extra circuit
// subtracts SR and divides by N through a pipelined divider of latency bo.
// With use_mem_in the input is first buffered, adding N cycles.
InverseRun run_isfdprt(const RadonArray& r, int h, bool use_mem_in = false);

// Fastest inverse: the (N+1) x N array feeds (N+1)-operand trees directly;
// the last row holds R(N,.), shifts one left per step and broadcasts its
// leftmost element.
InverseRun run_ifdprt(const RadonArray& r);

}  // namespace dprt::sim
