#include "dprt/sim/inverse.hpp"

#include <functional>

namespace dprt::sim {

namespace {

void check_inverse_side(int n) {
  // The Table II identities rely on ceil_log2(N+1) == ceil_log2(N), which
  // holds for every odd prime but not for N = 2.
  require(n >= 3, "inverse simulators require N >= 3");
}

Value width_limit(int bits) { return (Value{1} << bits) - 1; }

// Staged pipeline behind the inverse column trees. Two layouts:
//   scalable: tree(h) -> accumulate(1) -> subtract(1) -> divide(BO) -> store(1)
//   fast:     tree(log2(N+1)) -> subtract(1) -> divide(BO), result stored
//             in the divider-output cycle
// The subtract stage checks Z - SR >= 0; the divider checks exact division
// and the declared pixel width.
class InverseDatapath {
 public:
  InverseDatapath(const RadonArray& r, CycleRecorder* rec, int tree_latency,
                  bool staged_accumulate)
      : r_(r),
        n_(r.side()),
        widths_(inverse_widths(r.side(), r.bits_in())),
        staged_accumulate_(staged_accumulate),
        tree_("vtree", tree_latency, rec),
        htree_("htree", ceil_log2(r.side()), rec),
        acc_("acc", 1, rec),
        sub_("sub", 1, rec),
        div_("div", widths_.bo, rec),
        store_("store", 1, rec) {}

  const InverseDatapathWidths& widths() const { return widths_; }

  bool busy() const {
    return tree_.busy() || htree_.busy() || acc_.busy() || sub_.busy() ||
           div_.busy() || store_.busy();
  }

  void capture_sr(Value row_sum) { htree_.capture({{row_sum}, 0, -1, -1}); }

  void capture(std::vector<Value> lanes, Value aux, int strip, int direction) {
    const Value limit = width_limit(widths_.bo);
    for (Value v : lanes) {
      internal_check(v >= 0 && v <= limit, "tree output exceeds BO bits");
    }
    tree_.capture({std::move(lanes), aux, strip, direction});
  }

  // on_acc runs in the accumulate stage (scalable layout only) and returns
  // true when the item continues into the extra circuit. on_store receives
  // the final pixel rows.
  void service(const std::function<bool(StagePayload&)>& on_acc,
               const std::function<void(const StagePayload&)>& on_store) {
    if (auto sr = htree_.pop_ready()) {
      internal_check(!sr_valid_, "SR computed twice");
      internal_check(sr->lanes[0] <= width_limit(widths_.bq),
                     "SR exceeds BQ bits");
      sr_ = sr->lanes[0];
      sr_valid_ = true;
    }
    if (auto out = tree_.pop_ready()) {
      if (staged_accumulate_) {
        acc_.push(std::move(*out));
      } else {
        sub_.push(std::move(*out));
      }
    }
    if (auto out = acc_.pop_ready()) {
      if (on_acc(*out)) sub_.push(std::move(*out));
    }
    if (auto out = sub_.pop_ready()) {
      internal_check(sr_valid_, "SR not ready at subtract stage");
      const Value limit = width_limit(widths_.bo);
      for (Value& v : out->lanes) {
        v -= sr_;
        if (v < 0) {
          throw InvalidRadonArray("negative value before normalization; "
                                  "not a valid DPRT");
        }
        internal_check(v <= limit, "subtract result exceeds BO bits");
      }
      div_.push(std::move(*out));
    }
    if (auto out = div_.pop_ready()) {
      const Value pixel_limit = width_limit(r_.bits_in());
      for (Value& v : out->lanes) {
        if (v % n_ != 0) {
          throw InvalidRadonArray("normalization by N is not exact; "
                                  "not a valid DPRT");
        }
        v /= n_;
        if (v > pixel_limit) {
          throw InvalidRadonArray("decoded pixel exceeds declared width");
        }
      }
      if (staged_accumulate_) {
        store_.push(std::move(*out));
      } else {
        on_store(*out);
      }
    }
    if (auto out = store_.pop_ready()) on_store(*out);
  }

 private:
  const RadonArray& r_;
  int n_;
  InverseDatapathWidths widths_;
  bool staged_accumulate_;
  DelayLine tree_;
  DelayLine htree_;
  DelayLine acc_;
  DelayLine sub_;
  DelayLine div_;
  DelayLine store_;
  Value sr_ = 0;
  bool sr_valid_ = false;
};

}  // namespace

InverseDatapathWidths inverse_widths(int n, int bits) {
  require(is_prime(n), "N must be prime");
  require(bits >= 1, "bits must be >= 1");
  InverseDatapathWidths w;
  w.b_prime = bits + ceil_log2(n);
  w.bo = w.b_prime + ceil_log2(Value{n} + 1);
  w.bq = w.b_prime + ceil_log2(n);
  internal_check(w.bo >= w.bq, "bo must cover bq");
  return w;
}

InverseRun run_isfdprt(const RadonArray& r, int h, bool use_mem_in) {
  check_inverse_side(r.side());
  const int n = r.side();
  const StripPlan plan = make_strip_plan(n, h);
  const InverseDatapathWidths widths = inverse_widths(n, r.bits_in());

  CycleRecorder rec;
  MemModel mem_in("MEM_IN", n + 1, n, widths.b_prime, &rec);
  MemModel mem_out("MEM_OUT", n, n, widths.bo, &rec);
  CoreArray core(h, n, widths.b_prime, &rec);
  InverseDatapath path(r, &rec, plan.h_lat, /*staged_accumulate=*/true);

  std::vector<Value> rn_row;  // R(N,.), latched when its transfer occurs

  auto on_acc = [&](StagePayload& item) {
    const bool final_strip = item.strip == plan.k - 1;
    std::vector<Value> acc = mem_out.read_row(item.direction);
    for (int j = 0; j < n; ++j) acc[j] += item.lanes[j] + item.aux;
    if (final_strip) {
      item.lanes = std::move(acc);
    } else {
      mem_out.write_row(item.direction, acc);
    }
    return final_strip;
  };
  auto on_store = [&](const StagePayload& item) {
    mem_out.write_row(item.direction, item.lanes);
  };
  auto service = [&] { path.service(on_acc, on_store); };

  if (use_mem_in) {
    // N buffering cycles; row N's write shares the first strip-load cycle.
    for (int t = 0; t < n; ++t) {
      rec.begin("buffer");
      service();
      mem_in.write_row(t, r.row(t));
      rec.end();
    }
  }
  auto source_row = [&](int q) -> std::vector<Value> {
    if (use_mem_in) return mem_in.read_row(q);
    const auto row = r.row(q);
    return {row.begin(), row.end()};
  };

  for (int strip = 0; strip < plan.k; ++strip) {
    const int base = plan.row_base(strip);
    const int len = plan.length(strip);
    const bool last_strip = strip == plan.k - 1;
    for (int z = 0; z < h; ++z) {
      rec.begin("strip_load", strip);
      service();
      if (use_mem_in && strip == 0 && z == 0) mem_in.write_row(n, r.row(n));
      if (strip == 0 && z == 1) {
        Value row_sum = 0;
        for (int j = 0; j < n; ++j) row_sum += core.cell(0, j);
        path.capture_sr(row_sum);
      }
      if (z < len) {
        core.load_row(z, source_row(base + z));
      } else {
        if (last_strip && z == len) {
          // The otherwise unused row of the short last strip carries R(N,.).
          rn_row = source_row(n);
        }
        core.clear_row(z);
      }
      rec.end();
    }
    for (int k = 0; k < n; ++k) {
      rec.begin("project", strip, k);
      service();
      if (last_strip && plan.k == 1 && k == 0) {
        // Full-height strip: R(N,.) arrives right after the strip itself.
        rn_row = source_row(n);
      }
      const Value aux = last_strip ? rn_row[static_cast<std::size_t>(k)] : 0;
      path.capture(core.column_sums(0, len), aux, strip, k);
      for (int a = 0; a < len; ++a) {
        core.shift_row(a, Value{base} + a, /*left=*/false);
      }
      rec.end();
    }
  }
  while (path.busy()) {
    rec.begin("drain");
    service();
    rec.end();
  }

  CycleReport report;
  report.method = "isfdprt";
  report.n = n;
  report.bits = r.bits_in();
  report.h = h;
  report.use_mem_in = use_mem_in;
  report.total = rec.cycles_elapsed();
  Value buffer = 0, strips = 0, drain = 0;
  for (const CycleOps& ops : rec.history()) {
    if (ops.phase == "buffer") ++buffer;
    else if (ops.phase == "strip_load" || ops.phase == "project") ++strips;
    else ++drain;
  }
  report.phases = {{"buffer", buffer}, {"strips", strips}, {"drain", drain}};
  report.check_consistent();

  Grid px = mem_out.grid();
  return {Image(n, r.bits_in(), std::move(px)), std::move(report),
          rec.trace_lines()};
}

InverseRun run_ifdprt(const RadonArray& r) {
  check_inverse_side(r.side());
  const int n = r.side();
  const InverseDatapathWidths widths = inverse_widths(n, r.bits_in());
  const int tree_latency = ceil_log2(Value{n} + 1);

  CycleRecorder rec;
  CoreArray core(n + 1, n, widths.b_prime, &rec);
  InverseDatapath path(r, &rec, tree_latency, /*staged_accumulate=*/false);
  Grid out(n, n);

  auto on_acc = [](StagePayload&) { return false; };  // stage not present
  auto on_store = [&](const StagePayload& item) {
    auto dst = out.row(item.direction);
    std::copy(item.lanes.begin(), item.lanes.end(), dst.begin());
  };
  auto service = [&] { path.service(on_acc, on_store); };

  for (int t = 0; t <= n; ++t) {
    rec.begin("load");
    service();
    if (t == 1) {
      Value row_sum = 0;
      for (int j = 0; j < n; ++j) row_sum += core.cell(0, j);
      path.capture_sr(row_sum);
    }
    core.load_row(t, r.row(t));
    rec.end();
  }
  for (int i = 0; i < n; ++i) {
    rec.begin("project", 0, i);
    service();
    std::vector<Value> lanes = core.column_sums(0, n);
    const Value rni = core.cell(n, 0);  // broadcast (N+1)-th operand
    for (Value& v : lanes) v += rni;
    path.capture(std::move(lanes), 0, 0, i);
    for (int m = 1; m < n; ++m) core.shift_row(m, m, /*left=*/false);
    core.shift_row(n, 1, /*left=*/true);
    rec.end();
  }
  while (path.busy()) {
    rec.begin("drain");
    service();
    rec.end();
  }

  CycleReport report;
  report.method = "ifdprt";
  report.n = n;
  report.bits = r.bits_in();
  report.total = rec.cycles_elapsed();
  report.phases = {{"load", Value{n} + 1},
                   {"projections", n},
                   {"drain", report.total - (2 * Value{n} + 1)}};
  report.check_consistent();

  return {Image(n, r.bits_in(), std::move(out)), std::move(report),
          rec.trace_lines()};
}

}  // namespace dprt::sim
