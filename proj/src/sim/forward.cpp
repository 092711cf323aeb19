#include "dprt/sim/forward.hpp"

#include <numeric>

namespace dprt::sim {

namespace {

std::vector<Value> circular_flip(std::span<const Value> v) {
  const int n = static_cast<int>(v.size());
  std::vector<Value> out(v.size());
  for (int d = 0; d < n; ++d) {
    out[static_cast<std::size_t>(d)] = v[mod_index(-d, n)];
  }
  return out;
}

}  // namespace

SfdprtSim::SfdprtSim(const Image& img, int h)
    : img_(img),
      plan_(make_strip_plan(img.side(), h)),
      n_(img.side()),
      mem_in_("MEM_IN", n_, n_, img.bits(), &rec_, /*column_access=*/true),
      mem_out_("MEM_OUT", n_ + 1, n_, output_width(n_, img.bits()), &rec_),
      core_(h, n_, img.bits(), &rec_),
      tree_("vtree", plan_.h_lat, &rec_) {}

void SfdprtSim::service_tree() {
  if (auto out = tree_.pop_ready()) {
    apply_partial(out->direction, out->lanes);
  }
}

std::vector<Value> SfdprtSim::apply_partial(int k,
                                            std::span<const Value> partial) {
  std::vector<Value> acc = mem_out_.read_row(k);
  std::vector<Value> incoming(partial.begin(), partial.end());
  if (k == n_) incoming = circular_flip(partial);
  for (int d = 0; d < n_; ++d) acc[d] += incoming[d];
  mem_out_.write_row(k, acc);
  return acc;
}

void SfdprtSim::capture_direction(int r, int k) {
  tree_.capture({core_.column_sums(), 0, r, k});
}

Value SfdprtSim::load_shifted_image() {
  const int h = plan_.h;
  for (int t = 0; t < n_; ++t) {
    rec_.begin("load");
    mem_in_.write_row(t, img_.row(t));
    rec_.end();
  }
  // Each strip passes through the core: rows enter flipped, all rows shift
  // right by their absolute index in one parallel cycle, and leave plain
  // while the next strip streams in.
  for (int z = 0; z < plan_.k; ++z) {
    const int len = plan_.length(z);
    for (int y = 0; y < h; ++y) {
      rec_.begin("rearrange", z);
      if (z > 0) {
        mem_in_.write_row((z - 1) * h + y, core_.row_values(y));
      }
      if (y < len) {
        core_.load_row(y, mem_in_.read_row(z * h + y), /*flipped=*/true);
      } else {
        core_.clear_row(y);
      }
      rec_.end();
    }
    rec_.begin("rearrange", z);
    for (int a = 0; a < h; ++a) {
      core_.shift_row(a, Value{z} * h + a, /*left=*/false);
    }
    rec_.end();
  }
  // The final strip's write-back overlaps the first strip load of the next
  // process; the data is visible immediately, the write port is charged as
  // the overlapped cycles occur.
  for (int y = 0; y < plan_.length(plan_.k - 1); ++y) {
    mem_in_.write_row_deferred((plan_.k - 1) * h + y, core_.row_values(y));
  }
  return n_ + Value{plan_.k} * (h + 1);
}

Value SfdprtSim::load_strip(int r, StripMode mode) {
  require(r >= 0 && r < plan_.k, "strip index out of range");
  const int h = plan_.h;
  const int len = plan_.length(r);
  const char* phase = mode == StripMode::row ? "strip_load" : "last_load";
  for (int z = 0; z < h; ++z) {
    rec_.begin(phase, r);
    service_tree();
    mem_in_.drain_deferred();
    if (z < len) {
      auto row = mode == StripMode::row ? mem_in_.read_row(r * h + z)
                                        : mem_in_.read_column(r * h + z);
      core_.load_row(z, row, /*flipped=*/true);
    } else {
      core_.clear_row(z);
    }
    rec_.end();
  }
  rec_.begin(phase, r);
  service_tree();
  for (int a = 0; a < h; ++a) {
    core_.shift_row(a, Value{r} * h + a, /*left=*/(mode == StripMode::column));
  }
  rec_.end();
  return h + 1;
}

std::vector<Value> SfdprtSim::step_projection(int r, int k) {
  rec_.begin("project", r, k);
  service_tree();
  std::vector<Value> sums = core_.column_sums();
  tree_.capture({sums, 0, r, k});
  for (int a = 0; a < plan_.h; ++a) {
    core_.shift_row(a, Value{r} * plan_.h + a, /*left=*/true);
  }
  rec_.end();
  return sums;
}

std::vector<Value> SfdprtSim::add_partial_result(
    int k, std::span<const Value> partial) {
  internal_check(!tree_.busy(),
                 "standalone accumulate while tree outputs are in flight");
  rec_.begin("accumulate", -1, k);
  std::vector<Value> acc = apply_partial(k, partial);
  rec_.end();
  return acc;
}

CycleReport SfdprtSim::make_report() const {
  CycleReport report;
  report.method = "sfdprt";
  report.n = n_;
  report.bits = img_.bits();
  report.h = plan_.h;
  report.total = rec_.cycles_elapsed();
  Value load_shift = 0, projections = 0, last_projection = 0, drain = 0;
  for (const CycleOps& ops : rec_.history()) {
    if (ops.phase == "load" || ops.phase == "rearrange") ++load_shift;
    else if (ops.phase == "strip_load" || ops.phase == "project") ++projections;
    else if (ops.phase == "last_load" || ops.phase == "last_capture")
      ++last_projection;
    else ++drain;
  }
  report.phases = {{"load_shift", load_shift},
                   {"projections", projections},
                   {"last_projection", last_projection},
                   {"drain", drain}};
  report.check_consistent();
  return report;
}

ForwardRun SfdprtSim::run() {
  internal_check(rec_.cycles_elapsed() == 0, "run() needs a fresh simulator");
  load_shifted_image();
  for (int r = 0; r < plan_.k; ++r) {
    load_strip(r, StripMode::row);
    for (int k = 0; k < n_; ++k) step_projection(r, k);
  }
  // Last projection: each strip is loaded in column mode; its single capture
  // overlaps the first transfer cycle of the next strip.
  int pending = -1;
  for (int r = 0; r < plan_.k; ++r) {
    const int h = plan_.h;
    const int len = plan_.length(r);
    for (int z = 0; z < h; ++z) {
      rec_.begin("last_load", r);
      service_tree();
      if (pending >= 0 && z == 0) {
        capture_direction(pending, n_);
        pending = -1;
      }
      mem_in_.drain_deferred();
      if (z < len) {
        core_.load_row(z, mem_in_.read_column(r * h + z), /*flipped=*/true);
      } else {
        core_.clear_row(z);
      }
      rec_.end();
    }
    rec_.begin("last_load", r);
    service_tree();
    for (int a = 0; a < h; ++a) {
      core_.shift_row(a, Value{r} * h + a, /*left=*/true);
    }
    rec_.end();
    pending = r;
  }
  rec_.begin("last_capture", plan_.k - 1, n_);
  service_tree();
  capture_direction(pending, n_);
  rec_.end();
  for (int i = 0; i < plan_.h_lat; ++i) {
    rec_.begin("drain");
    service_tree();
    rec_.end();
  }
  internal_check(!tree_.busy(), "tree still busy after drain");
  internal_check(!mem_in_.has_deferred(), "deferred write-back never drained");

  Grid values = mem_out_.grid();
  ForwardRun result{RadonArray(n_, img_.bits(), std::move(values)),
                    make_report(), rec_.trace_lines()};
  return result;
}

ForwardRun run_sfdprt(const Image& img, int h) {
  return SfdprtSim(img, h).run();
}

ForwardRun run_fdprt(const Image& img) {
  const int n = img.side();
  const int lat = ceil_log2(n);
  CycleRecorder rec;
  CoreArray core(n, n, img.bits(), &rec);
  DelayLine tree("vtree", lat, &rec);
  Grid out(n + 1, n);

  auto service = [&] {
    if (auto o = tree.pop_ready()) {
      auto dst = out.row(o->direction);
      std::copy(o->lanes.begin(), o->lanes.end(), dst.begin());
    }
  };

  for (int t = 0; t < n; ++t) {
    rec.begin("load");
    service();
    core.load_row(t, img.row(t));
    rec.end();
  }
  std::vector<Value> strides(static_cast<std::size_t>(n));
  std::iota(strides.begin(), strides.end(), Value{0});
  for (int k = 0; k < n; ++k) {
    rec.begin("project", 0, k);
    service();
    tree.capture({core.column_sums(), 0, 0, k});
    if (k < n - 1) {
      for (int i = 1; i < n; ++i) core.shift_row(i, i, /*left=*/true);
    } else {
      // The edge that ends the last row-shear direction also performs the
      // fast transposition, exposing the image rows to the column trees.
      core.shift_all_then_transpose(strides);
    }
    rec.end();
  }
  rec.begin("project", 0, n);
  service();
  tree.capture({core.column_sums(), 0, 0, n});
  rec.end();
  for (int i = 0; i < lat; ++i) {
    rec.begin("drain");
    service();
    rec.end();
  }
  internal_check(!tree.busy(), "tree still busy after drain");

  CycleReport report;
  report.method = "fdprt";
  report.n = n;
  report.bits = img.bits();
  report.total = rec.cycles_elapsed();
  report.phases = {{"load", n},
                   {"projections", n + 1},
                   {"drain", lat}};
  report.check_consistent();
  return {RadonArray(n, img.bits(), std::move(out)), std::move(report),
          rec.trace_lines()};
}

}  // namespace dprt::sim
