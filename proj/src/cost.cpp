#include "dprt/cost.hpp"

namespace dprt {

namespace {

Value ceil_div(Value a, Value b) { return (a + b - 1) / b; }

void check_config(Method method, int n, int bits, int h) {
  require(is_prime(n), "N must be prime");
  if (method_is_inverse(method)) {
    require(bits >= 1, "inverse methods need the pixel width B");
  }
  if (method_is_scalable(method)) {
    require(h >= 2 && h <= n, "scalable methods need 2 <= H <= N");
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::serial: return "serial";
    case Method::systolic: return "systolic";
    case Method::sfdprt: return "sfdprt";
    case Method::fdprt: return "fdprt";
    case Method::isfdprt: return "isfdprt";
    case Method::ifdprt: return "ifdprt";
  }
  throw std::invalid_argument("unknown method");
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::serial, Method::systolic, Method::sfdprt,
                   Method::fdprt, Method::isfdprt, Method::ifdprt}) {
    if (name == method_name(m)) return m;
  }
  throw std::invalid_argument("unknown method: " + name);
}

bool method_is_scalable(Method m) {
  return m == Method::sfdprt || m == Method::isfdprt;
}

bool method_is_inverse(Method m) {
  return m == Method::isfdprt || m == Method::ifdprt;
}

TreeResources tree_resources(int operands, int bits) {
  require(operands >= 1, "operand count must be >= 1");
  require(bits >= 1, "bit width must be >= 1");
  TreeResources t;
  const int levels = ceil_log2(operands);
  Value a = operands;
  for (int z = 1; z <= levels; ++z) {
    const Value r = a % 2;
    a = a / 2;
    t.fa += a * (bits + z - 1);
    t.mux += a * bits;
    a = a + r;
    t.ff += a * (bits + z);
  }
  return t;
}

Value cycle_model(Method method, int n, int bits, int h, bool use_mem_in) {
  check_config(method, n, bits, h);
  const Value nn = n;
  const Value log_n = ceil_log2(nn);
  switch (method) {
    case Method::serial:
      return nn * nn * nn + 2 * nn * nn + nn;
    case Method::systolic:
      return nn * nn + nn + 1;
    case Method::sfdprt: {
      const Value k = ceil_div(nn, h);
      return k * (nn + 3 * h + 3) + nn + ceil_log2(h) + 1;
    }
    case Method::fdprt:
      return 2 * nn + log_n + 1;
    case Method::isfdprt: {
      const Value k = ceil_div(nn, h);
      Value total = k * (nn + h) + ceil_log2(h) + 3 + bits + 2 * log_n;
      if (use_mem_in) total += nn;
      return total;
    }
    case Method::ifdprt:
      return 2 * nn + 3 * log_n + bits + 2;
  }
  throw std::invalid_argument("unknown method");
}

ResourceReport resource_model(Method method, int n, int bits, int h) {
  check_config(method, n, bits, h);
  ResourceReport rep;
  rep.method = method;
  rep.n = n;
  rep.bits = bits;
  rep.h = method_is_scalable(method) ? h : 0;

  const Value nn = n;
  const Value b = bits;
  const Value log_n = ceil_log2(nn);
  const Value divider_bits = b + 2 * log_n;

  switch (method) {
    case Method::serial:
      rep.register_array_bits = nn * (b + log_n);
      rep.adder_tree_flipflops = 3 * b + 2 * log_n;
      rep.one_bit_additions = b + log_n;
      rep.ram_bits = nn * nn * b;
      rep.mux_known = false;
      break;
    case Method::systolic:
      rep.register_array_bits = nn * (nn + 1) * log_n;
      rep.adder_tree_flipflops = (nn + 1) * (3 * b + 2 * log_n);
      rep.one_bit_additions = (nn + 1) * (b + log_n);
      rep.ram_bits = nn * (nn + 1) * (b + log_n);
      rep.mux_known = false;
      break;
    case Method::sfdprt: {
      const Value k = ceil_div(nn, h);
      const TreeResources tree = tree_resources(h, bits);
      rep.register_array_bits = nn * h * b;
      rep.adder_tree_flipflops = nn * tree.ff;
      rep.one_bit_additions = nn * tree.fa + nn * (b + log_n);
      rep.ram_bits = nn * nn * b + nn * (nn + 1) * (b + log_n);
      rep.mux_count =
          nn * h * tree_resources(static_cast<int>(k) + 1, bits).mux;
      break;
    }
    case Method::fdprt: {
      const TreeResources tree = tree_resources(n, bits);
      rep.register_array_bits = nn * nn * b;
      rep.adder_tree_flipflops = nn * tree.ff;
      rep.one_bit_additions = nn * tree.fa;
      rep.ram_bits = 0;
      rep.mux_count = 2 * nn * nn * b;
      break;
    }
    case Method::isfdprt: {
      const Value k = ceil_div(nn, h);
      const int wide = bits + static_cast<int>(log_n);
      const TreeResources tree = tree_resources(h, wide);
      rep.register_array_bits = nn * h * wide;
      rep.adder_tree_flipflops = (nn + 1) * tree.ff + 3 * nn * divider_bits;
      rep.one_bit_additions = (nn + 1) * tree.fa + 2 * nn * divider_bits;
      rep.ram_bits = nn * nn * divider_bits;
      rep.mux_count = nn * h * tree_resources(static_cast<int>(k) + 1, wide).mux;
      rep.divider_count = nn;
      break;
    }
    case Method::ifdprt: {
      const int wide = bits + static_cast<int>(log_n);
      const TreeResources tree = tree_resources(n, wide);
      rep.register_array_bits = nn * nn * wide;
      rep.adder_tree_flipflops = (nn + 1) * tree.ff + nn * divider_bits;
      rep.one_bit_additions = (nn + 1) * tree.fa + nn * divider_bits;
      rep.ram_bits = 0;
      rep.mux_count = nn * nn * wide;
      rep.divider_count = nn;
      break;
    }
  }

  rep.divider_flipflops = rep.divider_count * 3 * divider_bits * divider_bits;
  rep.divider_additions = rep.divider_count * divider_bits * divider_bits;
  rep.divider_muxes = rep.divider_count * divider_bits * divider_bits;
  rep.total_flipflops = rep.register_array_bits + rep.adder_tree_flipflops +
                        rep.divider_flipflops;
  return rep;
}

std::vector<ParetoPoint> pareto_front(int n, int bits, bool inverse) {
  require(is_prime(n), "N must be prime");
  const Method method = inverse ? Method::isfdprt : Method::sfdprt;
  std::vector<ParetoPoint> front;
  for (int h = 2; h <= (n - 1) / 2; ++h) {
    if (ceil_div(n, h) < ceil_div(n, h - 1)) {
      ParetoPoint p;
      p.h = h;
      p.k = static_cast<int>(ceil_div(n, h));
      p.cycles = cycle_model(method, n, bits, h);
      p.resources = resource_model(method, n, bits, h);
      front.push_back(std::move(p));
    }
  }
  return front;
}

}  // namespace dprt
