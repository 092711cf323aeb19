#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "dprt/sim/trace.hpp"

namespace dprt::sim {

// A value travelling through the adder-tree / extra-circuit pipelines.
struct StagePayload {
  std::vector<Value> lanes;  // one value per output column
  Value aux = 0;             // side value carried along (e.g. R(N,k))
  int strip = -1;
  int direction = -1;
};

// Fixed-latency pipeline: an item pushed in cycle t becomes ready in cycle
// t + latency. With latency 0 the item is ready within the same cycle.
// Accepts at most one new item per cycle.
class DelayLine {
 public:
  DelayLine(std::string name, int latency, CycleRecorder* rec)
      : name_(std::move(name)), latency_(latency), rec_(rec) {}

  const std::string& name() const { return name_; }
  int latency() const { return latency_; }
  bool busy() const { return !q_.empty(); }

  // Latch inputs in the current cycle; counts as this tree's capture.
  void capture(StagePayload item) {
    rec_->tree_capture(name_);
    push(std::move(item));
  }

  // Enqueue without a capture record (stage-to-stage handoff).
  void push(StagePayload item) {
    const long long ready = rec_->cycle() + latency_;
    internal_check(q_.empty() || q_.back().ready < ready,
                   name_ + ": structural hazard, two items in one cycle");
    q_.push_back(Entry{ready, std::move(item)});
  }

  // Item whose latency expires in the current cycle, if any.
  std::optional<StagePayload> pop_ready() {
    if (q_.empty()) return std::nullopt;
    internal_check(q_.front().ready >= rec_->cycle(),
                   name_ + ": output missed its service cycle");
    if (q_.front().ready != rec_->cycle()) return std::nullopt;
    StagePayload item = std::move(q_.front().payload);
    q_.pop_front();
    return item;
  }

 private:
  struct Entry {
    long long ready;
    StagePayload payload;
  };

  std::string name_;
  int latency_;
  CycleRecorder* rec_;
  std::deque<Entry> q_;
};

}  // namespace dprt::sim
