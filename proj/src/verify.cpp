#include "dprt/verify.hpp"

#include <algorithm>
#include <random>

#include "dprt/cost.hpp"
#include "dprt/sim/forward.hpp"
#include "dprt/sim/inverse.hpp"
#include "dprt/strip.hpp"

namespace dprt {

Image random_image(int side, int bits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> dist(0, (Value{1} << bits) - 1);
  Grid px(side, side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) px(i, j) = dist(rng);
  }
  return Image(side, bits, std::move(px));
}

std::vector<int> strip_heights(int side, HPolicy policy) {
  std::vector<int> heights;
  if (policy == HPolicy::all) {
    for (int h = 2; h <= side; ++h) heights.push_back(h);
    return heights;
  }
  for (const ParetoPoint& p : pareto_front(side, /*bits=*/8)) {
    heights.push_back(p.h);
  }
  heights.push_back(2);
  heights.push_back(side);
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
  return heights;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b << 32);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options) {
  VerifyResult result;
  bool fault_pending = options.inject_fault;

  auto record = [&result](std::string name, bool pass, std::string detail) {
    result.checks.push_back({std::move(name), pass, std::move(detail)});
    result.all_pass = result.all_pass && pass;
  };

  for (int n : options.sides) {
    require(is_prime(n), "N must be prime");
    const std::vector<int> heights = strip_heights(n, options.policy);
    for (int image_index = 0; image_index < options.images; ++image_index) {
      const Image img = random_image(
          n, options.bits,
          mix_seed(options.seed, static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(image_index)));
      RadonArray radon = forward_dprt(img);
      const std::string tag =
          "N=" + std::to_string(n) + " img=" + std::to_string(image_index);

      // Roundtrip exactness.
      {
        bool pass = false;
        std::string detail;
        try {
          pass = inverse_dprt(radon) == img;
        } catch (const InvalidRadonArray& e) {
          detail = e.what();
        }
        record("roundtrip " + tag, pass, detail);
      }
      // Projection-mass conservation.
      {
        const Value s = total_sum(radon, 0);
        bool pass = true;
        for (int m = 1; m <= n; ++m) pass = pass && total_sum(radon, m) == s;
        record("mass " + tag, pass, "");
      }
      if (fault_pending) {
        // Negative control: tamper with the reference once so the
        // comparison below must fail.
        radon.set(0, 0, radon(0, 0) + 1);
        fault_pending = false;
      }
      // Strip equivalence, forward and inverse.
      for (int h : heights) {
        const StripPlan plan = make_strip_plan(n, h);
        std::vector<PartialRadon> parts;
        std::vector<PartialBackprojection> back;
        for (int r = 0; r < plan.k; ++r) {
          parts.push_back(partial_dprt(img, plan, r));
          back.push_back(partial_idprt(radon, plan, r));
        }
        const bool fwd = accumulate_partials(plan, parts) == radon;
        bool inv = false;
        std::string detail;
        try {
          inv = combine_partial_idprt(plan, back, radon) == img;
        } catch (const InvalidRadonArray& e) {
          detail = e.what();
        }
        record("strips " + tag + " H=" + std::to_string(h), fwd && inv,
               detail);
      }
      // Architecture simulations against the reference, cycle formulas
      // against the cost model.
      if (n <= options.sim_side_limit && image_index == 0) {
        auto guarded = [&record](std::string name, auto&& body) {
          bool pass = false;
          std::string detail;
          try {
            pass = body();
          } catch (const InvalidRadonArray& e) {
            detail = e.what();
          }
          record(std::move(name), pass, std::move(detail));
        };
        guarded("sim fdprt N=" + std::to_string(n), [&] {
          const auto run = sim::run_fdprt(img);
          return run.radon == radon &&
                 run.report.total == cycle_model(Method::fdprt, n, options.bits);
        });
        guarded("sim ifdprt N=" + std::to_string(n), [&] {
          const auto run = sim::run_ifdprt(radon);
          return run.image == img &&
                 run.report.total ==
                     cycle_model(Method::ifdprt, n, options.bits);
        });
        for (int h : heights) {
          guarded("sim scalable N=" + std::to_string(n) +
                      " H=" + std::to_string(h),
                  [&] {
                    const auto fwd = sim::run_sfdprt(img, h);
                    bool ok = fwd.radon == radon &&
                              fwd.report.total == cycle_model(Method::sfdprt, n,
                                                              options.bits, h);
                    for (bool mem_in : {false, true}) {
                      const auto inv = sim::run_isfdprt(radon, h, mem_in);
                      ok = ok && inv.image == img &&
                           inv.report.total ==
                               cycle_model(Method::isfdprt, n, options.bits, h,
                                           mem_in);
                    }
                    return ok;
                  });
        }
      }
    }
  }
  return result;
}

}  // namespace dprt
