#pragma once

#include <deque>
#include <string>
#include <vector>

#include "dprt/sim/trace.hpp"

namespace dprt::sim {

// Behavioral model of the banked dual-port RAM: `banks` RAM blocks of
// `rows` words each. A row access touches word `addr` of every bank; a
// column access reads bank i at address <base+i>_N, one full diagonal per
// cycle. On a same-cycle same-address collision the read returns the value
// written in that cycle (write-first).
class MemModel {
 public:
  MemModel(std::string name, int rows, int banks, int word_bits,
           CycleRecorder* rec, bool column_access = false);

  int rows() const { return rows_; }
  int banks() const { return banks_; }
  const std::string& name() const { return name_; }

  void write_row(int addr, std::span<const Value> values);
  std::vector<Value> read_row(int addr) const;
  // Column-mode read; only the input memory supports it.
  std::vector<Value> read_column(int base) const;

  // Applies a row write immediately but charges the write port in a later
  // cycle (the write-back that overlaps the next phase). drain_deferred()
  // logs one pending write, if any, into the current cycle.
  void write_row_deferred(int addr, std::vector<Value> values);
  void drain_deferred();
  bool has_deferred() const { return !deferred_.empty(); }

  const Grid& grid() const { return data_; }

 private:
  void store(int addr, std::span<const Value> values);

  std::string name_;
  int rows_;
  int banks_;
  int word_bits_;
  bool column_access_;
  CycleRecorder* rec_;
  Grid data_;
  std::deque<int> deferred_;
};

}  // namespace dprt::sim
