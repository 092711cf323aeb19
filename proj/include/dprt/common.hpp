#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dprt {

// All pixel, coefficient, cycle and resource arithmetic is exact 64-bit
// integer arithmetic. Width limits are enforced at the type boundaries.
using Value = std::int64_t;

// Positive remainder of a divided by b. Defined for negative a; b must be > 0.
Value mod_index(Value a, Value b);

// Smallest k >= 0 with 2^k >= x. Requires x >= 1.
int ceil_log2(Value x);

// Deterministic trial-division primality test.
bool is_prime(Value n);

// A sinogram that cannot be the DPRT of any image with the declared width:
// negative pre-normalization value, non-exact division by N, or a decoded
// pixel that exceeds the declared pixel width.
class InvalidRadonArray : public std::runtime_error {
 public:
  explicit InvalidRadonArray(const std::string& what)
      : std::runtime_error(what) {}
};

// Violation of an internal invariant (width overflow, datapath discipline).
// Signals a bug in this library, not bad input.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& what)
      : std::logic_error(what) {}
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalCheckError(msg);
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Dense row-major integer grid.
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, Value fill = 0)
      : rows_(rows), cols_(cols),
        v_(static_cast<std::size_t>(rows) * cols, fill) {
    require(rows >= 0 && cols >= 0, "Grid: negative dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Value& operator()(int r, int c) { return v_[index(r, c)]; }
  const Value& operator()(int r, int c) const { return v_[index(r, c)]; }

  std::span<Value> row(int r) {
    return {v_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }
  std::span<const Value> row(int r) const {
    return {v_.data() + index(r, 0), static_cast<std::size_t>(cols_)};
  }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Value> v_;
};

}  // namespace dprt
