#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dprt/cost.hpp"
#include "dprt/sim/inverse.hpp"
#include "dprt/verify.hpp"

using dprt::Grid;
using dprt::Image;
using dprt::InvalidRadonArray;
using dprt::RadonArray;
using dprt::Value;

namespace {

RadonArray constant_sinogram(int n, int bits, Value pixel) {
  RadonArray r(n, bits);
  for (int m = 0; m <= n; ++m) {
    for (int d = 0; d < n; ++d) r.set(m, d, pixel * n);
  }
  return r;
}

}  // namespace

TEST_CASE("inverse datapath widths") {
  const auto w7 = dprt::sim::inverse_widths(7, 8);
  CHECK(w7.b_prime == 11);
  CHECK(w7.bo == 14);
  CHECK(w7.bq == 14);
  const auto w251 = dprt::sim::inverse_widths(251, 8);
  CHECK(w251.b_prime == 16);
  CHECK(w251.bo == 24);
  CHECK(w251.bq == 24);
  const auto w2 = dprt::sim::inverse_widths(2, 1);
  CHECK(w2.b_prime == 2);
  CHECK(w2.bo == 4);  // ceil_log2(3) = 2
  CHECK(w2.bq == 3);
  CHECK(w2.bo >= w2.bq);
}

TEST_CASE("ifdprt spot cycle totals") {
  const Image img7 = dprt::random_image(7, 8, 31);
  const auto run = dprt::sim::run_ifdprt(dprt::forward_dprt(img7));
  CHECK(run.report.total == 33);  // 2N + 3n + B + 2
  CHECK(run.image == img7);
}

TEST_CASE("isfdprt spot cycle totals and MEM_IN adjustment") {
  const Image img7 = dprt::random_image(7, 8, 32);
  const RadonArray radon = dprt::forward_dprt(img7);
  const auto without = dprt::sim::run_isfdprt(radon, 2, false);
  CHECK(without.report.total == 54);
  CHECK(without.image == img7);
  const auto with = dprt::sim::run_isfdprt(radon, 2, true);
  CHECK(with.report.total == 61);  // add N when MEM_IN is used
  CHECK(with.image == img7);
}

TEST_CASE("constant sinogram reconstructs a constant image") {
  const RadonArray r = constant_sinogram(5, 4, 3);
  const auto fast = dprt::sim::run_ifdprt(r);
  const auto scalable = dprt::sim::run_isfdprt(r, 3, false);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(fast.image(i, j) == 3);
      CHECK(scalable.image(i, j) == 3);
    }
  }
}

TEST_CASE("inverse simulators match the reference everywhere") {
  std::uint64_t seed = 2000;
  for (int n : {3, 5, 7, 11, 13, 17}) {
    for (int bits : {4, 8}) {
      const Image img = dprt::random_image(n, bits, seed++);
      const RadonArray radon = dprt::forward_dprt(img);
      const auto fast = dprt::sim::run_ifdprt(radon);
      CHECK(fast.image == img);
      CHECK(fast.report.total ==
            dprt::cycle_model(dprt::Method::ifdprt, n, bits));
      fast.report.check_consistent();
      for (int h = 2; h <= n; ++h) {
        for (bool mem_in : {false, true}) {
          const auto run = dprt::sim::run_isfdprt(radon, h, mem_in);
          CHECK(run.image == img);
          CHECK(run.report.total ==
                dprt::cycle_model(dprt::Method::isfdprt, n, bits, h, mem_in));
          run.report.check_consistent();
        }
      }
    }
  }
}

TEST_CASE("the large inverse configuration") {
  const Image img = dprt::random_image(251, 8, 123);
  const RadonArray radon = dprt::forward_dprt(img);
  const auto run = dprt::sim::run_ifdprt(radon);
  CHECK(run.report.total == 536);  // 2*251 + 24 + 8 + 2
  CHECK(run.image == img);
}

TEST_CASE("invalid sinograms are rejected mid-run") {
  const Image img = dprt::random_image(7, 8, 40);
  RadonArray tampered = dprt::forward_dprt(img);
  tampered.set(2, 3, tampered(2, 3) + 1);
  CHECK_THROWS_AS(dprt::sim::run_ifdprt(tampered), InvalidRadonArray);
  CHECK_THROWS_AS(dprt::sim::run_isfdprt(tampered, 2, false),
                  InvalidRadonArray);

  // Driving the bracket negative trips the subtract-stage check.
  RadonArray negative(7, 8);
  negative.set(0, 0, 700);
  CHECK_THROWS_AS(dprt::sim::run_ifdprt(negative), InvalidRadonArray);
}

TEST_CASE("N=2 is outside the inverse simulators' domain") {
  const Image img = dprt::random_image(2, 4, 50);
  const RadonArray radon = dprt::forward_dprt(img);
  CHECK_THROWS_AS(dprt::sim::run_ifdprt(radon), std::invalid_argument);
  CHECK_THROWS_AS(dprt::sim::run_isfdprt(radon, 2, false),
                  std::invalid_argument);
}

TEST_CASE("inverse runs are deterministic") {
  const Image img = dprt::random_image(11, 8, 60);
  const RadonArray radon = dprt::forward_dprt(img);
  const auto a = dprt::sim::run_isfdprt(radon, 4, true);
  const auto b = dprt::sim::run_isfdprt(radon, 4, true);
  CHECK(a.trace == b.trace);
  CHECK(a.image == b.image);
  CHECK(a.trace.size() == static_cast<std::size_t>(a.report.total));
}

TEST_CASE("phase breakdown of the scalable inverse") {
  const Image img = dprt::random_image(7, 8, 61);
  const RadonArray radon = dprt::forward_dprt(img);
  const auto run = dprt::sim::run_isfdprt(radon, 2, false);
  CHECK(run.report.phase("buffer") == 0);
  CHECK(run.report.phase("strips") == 36);           // K(N+H)
  CHECK(run.report.phase("drain") == 18);            // h + 3 + B + 2n
  const auto buffered = dprt::sim::run_isfdprt(radon, 2, true);
  CHECK(buffered.report.phase("buffer") == 7);
}
