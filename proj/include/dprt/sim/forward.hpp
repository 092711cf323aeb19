#pragma once

#include "dprt/core.hpp"
#include "dprt/sim/core_array.hpp"
#include "dprt/sim/memory.hpp"
#include "dprt/sim/pipeline.hpp"
#include "dprt/sim/report.hpp"
#include "dprt/strip.hpp"

namespace dprt::sim {

enum class StripMode { row, column };

struct ForwardRun {
  RadonArray radon;
  CycleReport report;
  std::vector<std::string> trace;
};

// Cycle-level model of the scalable forward architecture: input memory with
// row/column access, an H x N register array of circular shifters feeding N
// column adder trees, and a dual-port accumulator memory.
//
// Memory mapping fixed by this model: after load_shifted_image, MEM_IN row q
// holds f(q, <q-j>_N) at bank j, so a column-mode read at base d returns
// image column d with bank i carrying row <d+i>_N. Strip loads enter the
// register array flipped (cell j takes bank <-j>_N) and are pre-aligned with
// one parallel shift: right by the absolute row index in row mode, left in
// column mode. Each projection step then shifts row q left by q.
class SfdprtSim {
 public:
  SfdprtSim(const Image& img, int h);

  // Plain image load followed by the shifted rearrangement; returns the
  // consumed cycles N + K(H+1). The write-back of the final strip overlaps
  // the next strip load and is charged there.
  Value load_shifted_image();

  // H row transfers plus the one parallel pre-shift; returns H + 1.
  // Unused rows of a short strip are zero-filled.
  Value load_strip(int r, StripMode mode);

  // One projection cycle: latch the column sums for direction k of strip r
  // and advance every row by its stride. The returned sums leave the adder
  // tree h_lat cycles later.
  std::vector<Value> step_projection(int r, int k);

  // One accumulator cycle: MEM_OUT read-add-write for direction k; the
  // incoming row is circularly flipped when k = N. Standalone variant of the
  // add the run schedule performs when a tree output emerges.
  std::vector<Value> add_partial_result(int k, std::span<const Value> partial);

  ForwardRun run();

  const StripPlan& plan() const { return plan_; }
  MemModel& mem_in() { return mem_in_; }
  MemModel& mem_out() { return mem_out_; }
  const CoreArray& core() const { return core_; }
  CycleRecorder& recorder() { return rec_; }

 private:
  void service_tree();
  std::vector<Value> apply_partial(int k, std::span<const Value> partial);
  void capture_direction(int r, int k);
  CycleReport make_report() const;

  Image img_;
  StripPlan plan_;
  int n_;
  CycleRecorder rec_;
  MemModel mem_in_;
  MemModel mem_out_;
  CoreArray core_;
  DelayLine tree_;
};

ForwardRun run_sfdprt(const Image& img, int h);

// Fastest architecture: the full image sits in an N x N register array, one
// direction is captured per cycle, and the last projection reads the array
// through a one-cycle transposition.
ForwardRun run_fdprt(const Image& img);

}  // namespace dprt::sim
