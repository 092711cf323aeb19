#pragma once

#include <vector>

#include "dprt/sim/trace.hpp"

namespace dprt::sim {

// The compute core's register array: `slots` rows of `side` cells, each row
// behind a circular shifter. All index arithmetic is modulo `side`.
//
// Conventions used throughout the simulators:
//   flipped load:  cell j receives incoming value <-j>_N
//   left shift s:  cell j receives the previous cell <j+s>_N
//   right shift s: cell j receives the previous cell <j-s>_N
class CoreArray {
 public:
  CoreArray(int slots, int side, int width_bits, CycleRecorder* rec);

  int slots() const { return slots_; }
  int side() const { return side_; }

  void load_row(int slot, std::span<const Value> values, bool flipped = false);
  void clear_row(int slot);
  void shift_row(int slot, Value amount, bool left);
  // One-cycle fast transposition (square arrays): each row first advances by
  // its per-step stride, then the array is transposed, as a single register
  // update.
  void shift_all_then_transpose(std::span<const Value> strides);

  Value cell(int slot, int col) const { return regs_(slot, col); }
  std::vector<Value> row_values(int slot) const;
  // Per-column sums over slots [first, last), the adder-tree operand sums.
  std::vector<Value> column_sums(int first, int last) const;
  std::vector<Value> column_sums() const { return column_sums(0, slots_); }

 private:
  int slots_;
  int side_;
  int width_bits_;
  CycleRecorder* rec_;
  Grid regs_;
};

}  // namespace dprt::sim
