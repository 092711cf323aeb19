#include "dprt/core.hpp"

namespace dprt {

namespace {

void check_dimensions(int side, int bits) {
  require(side >= 2, "side must be >= 2");
  require(is_prime(side), "N must be prime");
  require(bits >= 1, "bits must be >= 1");
  require(bits <= 32, "bits must be <= 32");
  // Inverse-path sums reach (N+1)*N*(2^B - 1); keep them inside int64.
  internal_check(bits + 2 * ceil_log2(side) + 2 <= 62,
                 "side/bits combination exceeds 64-bit headroom");
}

}  // namespace

Image::Image(int side, int bits) : side_(side), bits_(bits) {
  check_dimensions(side, bits);
  px_ = Grid(side, side);
}

Image::Image(int side, int bits, Grid pixels) : side_(side), bits_(bits) {
  check_dimensions(side, bits);
  require(pixels.rows() == side && pixels.cols() == side,
          "pixel grid does not match declared side");
  const Value limit = max_pixel();
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      Value v = pixels(i, j);
      require(v >= 0 && v <= limit, "pixel out of range for declared bits");
    }
  }
  px_ = std::move(pixels);
}

void Image::set(int i, int j, Value v) {
  require(v >= 0 && v <= max_pixel(), "pixel out of range for declared bits");
  px_(i, j) = v;
}

RadonArray::RadonArray(int side, int bits_in) : side_(side), bits_in_(bits_in) {
  check_dimensions(side, bits_in);
  v_ = Grid(side + 1, side);
}

RadonArray::RadonArray(int side, int bits_in, Grid values)
    : side_(side), bits_in_(bits_in) {
  check_dimensions(side, bits_in);
  require(values.rows() == side + 1 && values.cols() == side,
          "coefficient grid must be (N+1) x N");
  const Value limit = max_coeff();
  for (int m = 0; m <= side; ++m) {
    for (int d = 0; d < side; ++d) {
      Value v = values(m, d);
      require(v >= 0 && v <= limit,
              "coefficient out of range for declared width");
    }
  }
  v_ = std::move(values);
}

void RadonArray::set(int m, int d, Value v) {
  require(v >= 0 && v <= max_coeff(),
          "coefficient out of range for declared width");
  v_(m, d) = v;
}

int output_width(int side, int bits) {
  require(is_prime(side), "N must be prime");
  require(bits >= 1, "bits must be >= 1");
  return bits + ceil_log2(side);
}

RadonArray forward_dprt(const Image& img) {
  const int n = img.side();
  Grid out(n + 1, n);
  for (int m = 0; m < n; ++m) {
    auto acc = out.row(m);
    for (int i = 0; i < n; ++i) {
      const auto row = img.row(i);
      const int s = static_cast<int>(mod_index(Value{m} * i, n));
      // R(m,d) += f(i, <d + m*i>_N); split the wrap instead of re-reducing.
      for (int d = 0; d < n - s; ++d) acc[d] += row[d + s];
      for (int d = n - s; d < n; ++d) acc[d] += row[d + s - n];
    }
  }
  auto last = out.row(n);
  for (int d = 0; d < n; ++d) {
    Value sum = 0;
    for (Value v : img.row(d)) sum += v;
    last[d] = sum;
  }
  RadonArray result(n, img.bits(), std::move(out));
  // Exactness claim of the fixed output width.
  const Value limit = result.max_coeff();
  for (int m = 0; m <= n; ++m) {
    for (int d = 0; d < n; ++d) {
      internal_check(result(m, d) <= limit, "forward sum exceeds B+log2(N) bits");
    }
  }
  return result;
}

Value total_sum(const RadonArray& r, int m) {
  require(m >= 0 && m <= r.side(), "direction index out of range");
  Value sum = 0;
  for (Value v : r.row(m)) sum += v;
  return sum;
}

Image inverse_dprt(const RadonArray& r) {
  const int n = r.side();
  const Value s = total_sum(r, 0);
  const Value pixel_limit = (Value{1} << r.bits_in()) - 1;
  Grid px(n, n);
  std::vector<Value> acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), Value{0});
    for (int m = 0; m < n; ++m) {
      const auto row = r.row(m);
      const int sh = static_cast<int>(mod_index(Value{m} * i, n));
      // acc[j] += R(m, <j - m*i>_N)
      for (int j = 0; j < sh; ++j) acc[j] += row[j - sh + n];
      for (int j = sh; j < n; ++j) acc[j] += row[j - sh];
    }
    const Value rni = r(n, i);
    for (int j = 0; j < n; ++j) {
      const Value bracket = acc[j] - s + rni;
      if (bracket < 0) {
        throw InvalidRadonArray("negative value before normalization; "
                                "not a valid DPRT");
      }
      if (bracket % n != 0) {
        throw InvalidRadonArray("normalization by N is not exact; "
                                "not a valid DPRT");
      }
      const Value pixel = bracket / n;
      if (pixel > pixel_limit) {
        throw InvalidRadonArray("decoded pixel exceeds declared width");
      }
      px(i, j) = pixel;
    }
  }
  return Image(n, r.bits_in(), std::move(px));
}

}  // namespace dprt
