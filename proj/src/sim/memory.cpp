#include "dprt/sim/memory.hpp"

namespace dprt::sim {

MemModel::MemModel(std::string name, int rows, int banks, int word_bits,
                   CycleRecorder* rec, bool column_access)
    : name_(std::move(name)),
      rows_(rows),
      banks_(banks),
      word_bits_(word_bits),
      column_access_(column_access),
      rec_(rec),
      data_(rows, banks) {}

void MemModel::store(int addr, std::span<const Value> values) {
  internal_check(addr >= 0 && addr < rows_, name_ + ": address out of range");
  internal_check(static_cast<int>(values.size()) == banks_,
                 name_ + ": row width mismatch");
  const Value limit = (Value{1} << word_bits_) - 1;
  auto dst = data_.row(addr);
  for (int i = 0; i < banks_; ++i) {
    internal_check(values[i] >= 0 && values[i] <= limit,
                   name_ + ": value exceeds word width");
    dst[i] = values[i];
  }
}

void MemModel::write_row(int addr, std::span<const Value> values) {
  store(addr, values);
  rec_->mem_write(name_, addr);
}

std::vector<Value> MemModel::read_row(int addr) const {
  internal_check(addr >= 0 && addr < rows_, name_ + ": address out of range");
  rec_->mem_read(name_, addr);
  const auto src = data_.row(addr);
  return {src.begin(), src.end()};
}

std::vector<Value> MemModel::read_column(int base) const {
  internal_check(column_access_, name_ + ": column access not supported");
  internal_check(base >= 0 && base < rows_, name_ + ": address out of range");
  rec_->mem_read(name_, base, /*column=*/true);
  std::vector<Value> out(static_cast<std::size_t>(banks_));
  for (int i = 0; i < banks_; ++i) {
    const int addr = static_cast<int>(mod_index(base + i, rows_));
    out[static_cast<std::size_t>(i)] = data_(addr, i);
  }
  return out;
}

void MemModel::write_row_deferred(int addr, std::vector<Value> values) {
  store(addr, values);
  deferred_.push_back(addr);
}

void MemModel::drain_deferred() {
  if (deferred_.empty()) return;
  rec_->mem_write(name_, deferred_.front());
  deferred_.pop_front();
}

}  // namespace dprt::sim
