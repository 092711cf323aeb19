#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dprt/core.hpp"
#include "dprt/verify.hpp"
#include "oracle.hpp"

using dprt::Grid;
using dprt::Image;
using dprt::InvalidRadonArray;
using dprt::RadonArray;
using dprt::Value;

namespace {

Image running_example() {
  Grid px(3, 3);
  Value v = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) px(i, j) = v++;
  }
  return Image(3, 4, std::move(px));
}

Image constant_image(int n, int bits, Value c) {
  Grid px(n, n, c);
  return Image(n, bits, std::move(px));
}

}  // namespace

TEST_CASE("mod_index") {
  CHECK(dprt::mod_index(255, 251) == 4);
  CHECK(dprt::mod_index(0, 7) == 0);
  CHECK(dprt::mod_index(-3, 7) == 4);
  CHECK(dprt::mod_index(-7, 7) == 0);
  CHECK(dprt::mod_index(13, 13) == 0);
  CHECK_THROWS_AS(dprt::mod_index(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dprt::mod_index(1, -5), std::invalid_argument);
}

TEST_CASE("mod_index is a homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Value> dist(-1000000, 1000000);
  for (int trial = 0; trial < 200; ++trial) {
    const Value a = dist(rng);
    const Value b = dist(rng);
    const Value n = 1 + (dist(rng) & 0xff);
    CHECK(dprt::mod_index(a + b, n) ==
          dprt::mod_index(dprt::mod_index(a, n) + dprt::mod_index(b, n), n));
  }
}

TEST_CASE("ceil_log2 and primality") {
  CHECK(dprt::ceil_log2(1) == 0);
  CHECK(dprt::ceil_log2(2) == 1);
  CHECK(dprt::ceil_log2(3) == 2);
  CHECK(dprt::ceil_log2(251) == 8);
  CHECK(dprt::is_prime(2));
  CHECK(dprt::is_prime(251));
  CHECK_FALSE(dprt::is_prime(1));
  CHECK_FALSE(dprt::is_prime(4));
  CHECK_FALSE(dprt::is_prime(249));  // 3 * 83
}

TEST_CASE("output_width") {
  CHECK(dprt::output_width(251, 8) == 16);
  CHECK(dprt::output_width(2, 1) == 2);
  CHECK(dprt::output_width(7, 8) == 11);
  CHECK_THROWS_AS(dprt::output_width(9, 8), std::invalid_argument);
}

TEST_CASE("image construction enforces the invariants") {
  CHECK_THROWS_WITH_AS(Image(4, 8), "N must be prime", std::invalid_argument);
  CHECK_THROWS_AS(Image(3, 0), std::invalid_argument);
  Grid px(3, 3);
  px(0, 0) = 16;  // too wide for 4 bits
  CHECK_THROWS_AS(Image(3, 4, px), std::invalid_argument);
  Image img(3, 4);
  CHECK_THROWS_AS(img.set(0, 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(img.set(0, 0, 16), std::invalid_argument);
  img.set(0, 0, 15);
  CHECK(img(0, 0) == 15);
}

TEST_CASE("forward DPRT of the 3x3 running example") {
  const Image img = running_example();
  // Oracle first: the frozen table below was produced by the independent
  // triple loop; assert both stay in agreement.
  const Grid reference = oracle::naive_forward(img);
  const Value frozen[4][3] = {
      {12, 15, 18}, {15, 15, 15}, {15, 15, 15}, {6, 15, 24}};
  const RadonArray radon = dprt::forward_dprt(img);
  CHECK(radon.side() == 3);
  CHECK(radon.bits_in() == 4);
  for (int m = 0; m <= 3; ++m) {
    for (int d = 0; d < 3; ++d) {
      CHECK(reference(m, d) == frozen[m][d]);
      CHECK(radon(m, d) == frozen[m][d]);
    }
  }
}

TEST_CASE("forward DPRT of a delta image") {
  Image img(7, 8);
  img.set(0, 0, 1);
  const RadonArray radon = dprt::forward_dprt(img);
  for (int m = 0; m <= 7; ++m) {
    for (int d = 0; d < 7; ++d) {
      CHECK(radon(m, d) == (d == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("forward DPRT of a constant image") {
  const RadonArray radon = dprt::forward_dprt(constant_image(5, 4, 3));
  for (int m = 0; m <= 5; ++m) {
    for (int d = 0; d < 5; ++d) CHECK(radon(m, d) == 15);
  }
}

TEST_CASE("total_sum") {
  const RadonArray radon = dprt::forward_dprt(running_example());
  CHECK(dprt::total_sum(radon, 0) == 45);
  CHECK(dprt::total_sum(radon, 1) == 45);
  CHECK(dprt::total_sum(radon, 3) == 45);
  CHECK_THROWS_AS(dprt::total_sum(radon, 4), std::invalid_argument);
  CHECK_THROWS_AS(dprt::total_sum(radon, -1), std::invalid_argument);

  const RadonArray constant = dprt::forward_dprt(constant_image(5, 8, 9));
  for (int m = 0; m <= 5; ++m) CHECK(dprt::total_sum(constant, m) == 225);

  Image delta(7, 8);
  delta.set(3, 4, 1);
  const RadonArray spike = dprt::forward_dprt(delta);
  for (int m = 0; m <= 7; ++m) CHECK(dprt::total_sum(spike, m) == 1);
}

TEST_CASE("inverse recovers the running example") {
  const Image img = running_example();
  const RadonArray radon = dprt::forward_dprt(img);
  // Spot value of the reconstruction formula at (0,0).
  CHECK((radon(0, 0) + radon(1, 0) + radon(2, 0) - 45 + radon(3, 0)) / 3 == 1);
  CHECK(dprt::inverse_dprt(radon) == img);
}

TEST_CASE("inverse of a constant sinogram") {
  RadonArray radon(5, 4);
  for (int m = 0; m <= 5; ++m) {
    for (int d = 0; d < 5; ++d) radon.set(m, d, 15);
  }
  CHECK(dprt::inverse_dprt(radon) == constant_image(5, 4, 3));
}

TEST_CASE("inverse rejects invalid sinograms") {
  // All ones except R(0,0) = 2: the projection masses disagree, so the
  // divisibility/positivity check must fire.
  RadonArray radon(3, 4);
  for (int m = 0; m <= 3; ++m) {
    for (int d = 0; d < 3; ++d) radon.set(m, d, 1);
  }
  radon.set(0, 0, 2);
  CHECK_THROWS_AS(dprt::inverse_dprt(radon), InvalidRadonArray);

  // Tampering with a valid sinogram breaks it as well.
  RadonArray tampered = dprt::forward_dprt(running_example());
  tampered.set(1, 2, tampered(1, 2) + 1);
  CHECK_THROWS_AS(dprt::inverse_dprt(tampered), InvalidRadonArray);

  // A zero sinogram with a huge R(N,.) drives the bracket negative for some
  // pixel once the total sum outweighs a row.
  RadonArray negative(3, 4);
  negative.set(0, 0, 45);
  negative.set(1, 0, 1);
  CHECK_THROWS_AS(dprt::inverse_dprt(negative), InvalidRadonArray);
}

TEST_CASE("inverse rejects pixels wider than the declared width") {
  // DPRT of a 5-bit delta image relabeled as 4-bit: the coefficients stay in
  // range, but the decoded pixel overflows the declared width.
  Image wide(3, 5);
  wide.set(0, 0, 16);
  const RadonArray radon = dprt::forward_dprt(wide);
  Grid values = radon.values();
  const RadonArray relabeled(3, 4, std::move(values));
  CHECK_THROWS_AS(dprt::inverse_dprt(relabeled), InvalidRadonArray);
}

TEST_CASE("roundtrip is exact over random images") {
  std::uint64_t seed = 1;
  for (int n : {3, 5, 7, 11, 13, 17}) {
    for (int bits : {1, 4, 8}) {
      for (int trial = 0; trial < 8; ++trial) {
        const Image img = dprt::random_image(n, bits, seed++);
        const RadonArray radon = dprt::forward_dprt(img);
        CHECK(radon.values() == oracle::naive_forward(img));
        CHECK(dprt::inverse_dprt(radon) == img);
        CHECK(oracle::naive_inverse(radon.values(), n) == img.pixels());
      }
    }
  }
  // One large case, capped for runtime.
  const Image big = dprt::random_image(251, 8, seed);
  CHECK(dprt::inverse_dprt(dprt::forward_dprt(big)) == big);
}

TEST_CASE("projection mass is conserved") {
  std::uint64_t seed = 99;
  for (int n : {3, 7, 13}) {
    const Image img = dprt::random_image(n, 8, seed++);
    const RadonArray radon = dprt::forward_dprt(img);
    Value total = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) total += img(i, j);
    }
    for (int m = 0; m <= n; ++m) CHECK(dprt::total_sum(radon, m) == total);
  }
}

TEST_CASE("range bound is met with the all-max image") {
  for (int n : {3, 7}) {
    for (int bits : {1, 8}) {
      const Image img = constant_image(n, bits, (Value{1} << bits) - 1);
      const RadonArray radon = dprt::forward_dprt(img);
      const Value bound = n * ((Value{1} << bits) - 1);
      bool hit = false;
      for (int m = 0; m <= n; ++m) {
        for (int d = 0; d < n; ++d) {
          CHECK(radon(m, d) <= bound);
          hit = hit || radon(m, d) == bound;
        }
      }
      CHECK(hit);  // the extreme is actually reached
    }
  }
}

TEST_CASE("circular shift covariance") {
  // g(i,j) = f(i, <j-1>_N)  =>  R_g(m,d) = R_f(m, <d-1>_N) for m < N and the
  // last projection is unchanged.
  std::uint64_t seed = 4242;
  for (int n : {5, 11}) {
    const Image f = dprt::random_image(n, 8, seed++);
    Grid shifted(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        shifted(i, j) = f(i, static_cast<int>(dprt::mod_index(j - 1, n)));
      }
    }
    const RadonArray rf = dprt::forward_dprt(f);
    const RadonArray rg = dprt::forward_dprt(Image(n, 8, std::move(shifted)));
    for (int m = 0; m < n; ++m) {
      for (int d = 0; d < n; ++d) {
        CHECK(rg(m, d) == rf(m, static_cast<int>(dprt::mod_index(d - 1, n))));
      }
    }
    for (int d = 0; d < n; ++d) CHECK(rg(n, d) == rf(n, d));
  }
}
