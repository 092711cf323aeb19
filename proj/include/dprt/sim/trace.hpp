#pragma once

#include <string>
#include <vector>

#include "dprt/common.hpp"

namespace dprt::sim {

// One memory port access within a cycle. `column` marks a diagonal
// (column-mode) read.
struct MemAccess {
  std::string mem;
  char port = 'R';  // 'R' or 'W'
  int addr = 0;
  bool column = false;
};

// Everything that happened in one simulated cycle.
struct CycleOps {
  long long cycle = 0;
  std::string phase;
  int strip = -1;      // -1 when not applicable
  int direction = -1;  // -1 when not applicable
  std::vector<MemAccess> mem_ops;
  std::vector<int> row_updates;       // register rows loaded/shifted this cycle
  std::vector<std::string> captures;  // adder trees that latched inputs
  std::vector<std::string> notes;     // e.g. "xpose"
};

// Per-cycle ledger. Enforces the datapath discipline as the schedule runs:
// at most one read and one write per memory, one update per register row and
// one capture per adder tree in any single cycle.
class CycleRecorder {
 public:
  void begin(std::string phase, int strip = -1, int direction = -1);
  void end();

  void mem_read(const std::string& mem, int addr, bool column = false);
  void mem_write(const std::string& mem, int addr);
  void row_update(int slot);
  void tree_capture(const std::string& tree);
  void note(std::string tag);

  bool in_cycle() const { return in_cycle_; }
  // Index of the cycle currently being recorded (valid between begin/end).
  long long cycle() const { return next_cycle_ - 1; }
  // Number of completed cycles.
  long long cycles_elapsed() const { return in_cycle_ ? cycle() : next_cycle_; }

  const std::vector<CycleOps>& history() const { return history_; }

  // Trace text: one line per cycle, "cycle phase strip direction mem_ops"
  // with "-" for empty fields and mem_ops like MEM_IN:R3,MEM_IN:C7,MEM_OUT:W2
  // (C = column-mode read).
  static std::string format_line(const CycleOps& ops);
  std::vector<std::string> trace_lines() const;

 private:
  CycleOps& current();

  bool in_cycle_ = false;
  long long next_cycle_ = 0;
  std::vector<CycleOps> history_;
};

}  // namespace dprt::sim
