#include "dprt/sim/trace.hpp"

#include <algorithm>

namespace dprt::sim {

void CycleRecorder::begin(std::string phase, int strip, int direction) {
  internal_check(!in_cycle_, "cycle already in progress");
  in_cycle_ = true;
  CycleOps ops;
  ops.cycle = next_cycle_++;
  ops.phase = std::move(phase);
  ops.strip = strip;
  ops.direction = direction;
  history_.push_back(std::move(ops));
}

void CycleRecorder::end() {
  internal_check(in_cycle_, "no cycle in progress");
  in_cycle_ = false;
}

CycleOps& CycleRecorder::current() {
  internal_check(in_cycle_, "operation outside of a cycle");
  return history_.back();
}

void CycleRecorder::mem_read(const std::string& mem, int addr, bool column) {
  CycleOps& ops = current();
  for (const MemAccess& a : ops.mem_ops) {
    internal_check(!(a.mem == mem && a.port == 'R'),
                   "two reads of " + mem + " in one cycle");
  }
  ops.mem_ops.push_back({mem, 'R', addr, column});
}

void CycleRecorder::mem_write(const std::string& mem, int addr) {
  CycleOps& ops = current();
  for (const MemAccess& a : ops.mem_ops) {
    internal_check(!(a.mem == mem && a.port == 'W'),
                   "two writes of " + mem + " in one cycle");
  }
  ops.mem_ops.push_back({mem, 'W', addr, false});
}

void CycleRecorder::row_update(int slot) {
  CycleOps& ops = current();
  internal_check(std::find(ops.row_updates.begin(), ops.row_updates.end(),
                           slot) == ops.row_updates.end(),
                 "register row updated twice in one cycle");
  ops.row_updates.push_back(slot);
}

void CycleRecorder::tree_capture(const std::string& tree) {
  CycleOps& ops = current();
  internal_check(std::find(ops.captures.begin(), ops.captures.end(), tree) ==
                     ops.captures.end(),
                 "adder tree " + tree + " captured twice in one cycle");
  ops.captures.push_back(tree);
}

void CycleRecorder::note(std::string tag) {
  current().notes.push_back(std::move(tag));
}

std::string CycleRecorder::format_line(const CycleOps& ops) {
  std::string line = std::to_string(ops.cycle);
  line += ' ';
  line += ops.phase.empty() ? "-" : ops.phase;
  line += ' ';
  line += ops.strip < 0 ? "-" : std::to_string(ops.strip);
  line += ' ';
  line += ops.direction < 0 ? "-" : std::to_string(ops.direction);
  line += ' ';
  if (ops.mem_ops.empty()) {
    line += '-';
  } else {
    for (std::size_t i = 0; i < ops.mem_ops.size(); ++i) {
      const MemAccess& a = ops.mem_ops[i];
      if (i > 0) line += ',';
      line += a.mem;
      line += ':';
      line += a.port == 'R' ? (a.column ? 'C' : 'R') : 'W';
      line += std::to_string(a.addr);
    }
  }
  return line;
}

std::vector<std::string> CycleRecorder::trace_lines() const {
  std::vector<std::string> lines;
  lines.reserve(history_.size());
  for (const CycleOps& ops : history_) lines.push_back(format_line(ops));
  return lines;
}

}  // namespace dprt::sim
