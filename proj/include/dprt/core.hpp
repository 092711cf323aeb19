#pragma once

#include "dprt/common.hpp"

namespace dprt {

// N x N image with B-bit non-negative pixels, N prime.
class Image {
 public:
  // Zero-filled image.
  Image(int side, int bits);
  // Takes ownership of a pixel grid; every pixel is range-checked.
  Image(int side, int bits, Grid pixels);

  int side() const { return side_; }
  int bits() const { return bits_; }
  Value max_pixel() const { return (Value{1} << bits_) - 1; }

  Value operator()(int i, int j) const { return px_(i, j); }
  void set(int i, int j, Value v);
  std::span<const Value> row(int i) const { return px_.row(i); }
  const Grid& pixels() const { return px_; }

  bool operator==(const Image&) const = default;

 private:
  int side_;
  int bits_;
  Grid px_;
};

// DPRT coefficient array: (N+1) x N, entry (m, d) with m = 0..N the prime
// direction and d = 0..N-1 the offset. Every coefficient fits in
// bits_in + ceil_log2(N) bits.
class RadonArray {
 public:
  RadonArray(int side, int bits_in);
  RadonArray(int side, int bits_in, Grid values);

  int side() const { return side_; }
  int bits_in() const { return bits_in_; }
  // Largest admissible coefficient, N * (2^B - 1).
  Value max_coeff() const {
    return side_ * ((Value{1} << bits_in_) - 1);
  }

  Value operator()(int m, int d) const { return v_(m, d); }
  void set(int m, int d, Value v);
  std::span<const Value> row(int m) const { return v_.row(m); }
  const Grid& values() const { return v_; }

  bool operator==(const RadonArray&) const = default;

 private:
  int side_;
  int bits_in_;
  Grid v_;
};

// Exact output width of the transform: bits + ceil_log2(side).
int output_width(int side, int bits);

// Forward DPRT. For m < N: R(m,d) = sum_i f(i, <d+mi>_N); row N holds the
// image row sums R(N,d) = sum_j f(d,j).
RadonArray forward_dprt(const Image& img);

// Sum of one projection row, sum_d R(m,d). Equals the total pixel sum S for
// every m when r is a valid DPRT.
Value total_sum(const RadonArray& r, int m);

// Inverse DPRT: f(i,j) = (1/N)[sum_{m<N} R(m, <j-mi>_N) - S + R(N,i)].
// Throws InvalidRadonArray when the input cannot be the DPRT of any image
// with the declared width (negative bracket, inexact division, or pixel
// overflow).
Image inverse_dprt(const RadonArray& r);

}  // namespace dprt
