#include "dprt/common.hpp"

namespace dprt {

Value mod_index(Value a, Value b) {
  require(b > 0, "mod_index: modulus must be positive");
  Value r = a % b;
  if (r < 0) r += b;
  return r;
}

int ceil_log2(Value x) {
  require(x >= 1, "ceil_log2: argument must be >= 1");
  int k = 0;
  Value p = 1;
  while (p < x) {
    p <<= 1;
    ++k;
  }
  return k;
}

bool is_prime(Value n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Value d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace dprt
