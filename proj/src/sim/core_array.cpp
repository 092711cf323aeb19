#include "dprt/sim/core_array.hpp"

namespace dprt::sim {

CoreArray::CoreArray(int slots, int side, int width_bits, CycleRecorder* rec)
    : slots_(slots),
      side_(side),
      width_bits_(width_bits),
      rec_(rec),
      regs_(slots, side) {}

void CoreArray::load_row(int slot, std::span<const Value> values,
                         bool flipped) {
  internal_check(slot >= 0 && slot < slots_, "core: slot out of range");
  internal_check(static_cast<int>(values.size()) == side_,
                 "core: row width mismatch");
  const Value limit = (Value{1} << width_bits_) - 1;
  auto dst = regs_.row(slot);
  for (int j = 0; j < side_; ++j) {
    const int src = flipped ? static_cast<int>(mod_index(-j, side_)) : j;
    internal_check(values[src] >= 0 && values[src] <= limit,
                   "core: value exceeds register width");
    dst[j] = values[src];
  }
  rec_->row_update(slot);
}

void CoreArray::clear_row(int slot) {
  internal_check(slot >= 0 && slot < slots_, "core: slot out of range");
  auto dst = regs_.row(slot);
  std::fill(dst.begin(), dst.end(), Value{0});
  rec_->row_update(slot);
}

void CoreArray::shift_row(int slot, Value amount, bool left) {
  internal_check(slot >= 0 && slot < slots_, "core: slot out of range");
  const int s = static_cast<int>(mod_index(left ? amount : -amount, side_));
  const auto src = regs_.row(slot);
  std::vector<Value> next(static_cast<std::size_t>(side_));
  for (int j = 0; j < side_; ++j) {
    next[static_cast<std::size_t>(j)] = src[(j + s) % side_];
  }
  std::copy(next.begin(), next.end(), src.begin());
  rec_->row_update(slot);
}

void CoreArray::shift_all_then_transpose(std::span<const Value> strides) {
  internal_check(slots_ == side_, "core: transpose needs a square array");
  internal_check(static_cast<int>(strides.size()) == slots_,
                 "core: one stride per row");
  Grid next(slots_, side_);
  for (int i = 0; i < slots_; ++i) {
    const int s = static_cast<int>(mod_index(strides[i], side_));
    for (int j = 0; j < side_; ++j) {
      next(j, i) = regs_(i, (j + s) % side_);
    }
    rec_->row_update(i);
  }
  regs_ = std::move(next);
  rec_->note("xpose");
}

std::vector<Value> CoreArray::row_values(int slot) const {
  internal_check(slot >= 0 && slot < slots_, "core: slot out of range");
  const auto src = regs_.row(slot);
  return {src.begin(), src.end()};
}

std::vector<Value> CoreArray::column_sums(int first, int last) const {
  internal_check(0 <= first && first <= last && last <= slots_,
                 "core: slot range out of bounds");
  std::vector<Value> sums(static_cast<std::size_t>(side_), 0);
  for (int a = first; a < last; ++a) {
    const auto row = regs_.row(a);
    for (int j = 0; j < side_; ++j) sums[static_cast<std::size_t>(j)] += row[j];
  }
  return sums;
}

}  // namespace dprt::sim
