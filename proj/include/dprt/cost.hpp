#pragma once

#include <string>
#include <vector>

#include "dprt/common.hpp"

namespace dprt {

enum class Method { serial, systolic, sfdprt, fdprt, isfdprt, ifdprt };

const char* method_name(Method m);
Method method_from_name(const std::string& name);
bool method_is_scalable(Method m);
bool method_is_inverse(Method m);

// Resources of one fully pipelined X-operand, B-bit adder tree: equivalent
// 1-bit full adders, flip-flops (output registers included, input registers
// not), and 2-to-1 MUXes.
struct TreeResources {
  Value fa = 0;
  Value ff = 0;
  Value mux = 0;
};

TreeResources tree_resources(int operands, int bits);

// Closed-form cycle count for a full transform. `bits` is required for the
// inverse methods, `h` for the scalable ones; `use_mem_in` adds the input
// buffering cycles of the scalable inverse.
Value cycle_model(Method method, int n, int bits = 0, int h = 0,
                  bool use_mem_in = false);

struct ResourceReport {
  Method method = Method::serial;
  int n = 0;
  int bits = 0;
  int h = 0;  // 0 when the method is not scalable

  Value register_array_bits = 0;
  Value adder_tree_flipflops = 0;
  Value one_bit_additions = 0;
  Value ram_bits = 0;
  Value mux_count = 0;        // meaningful only when mux_known
  bool mux_known = true;      // false for the serial/systolic baselines
  Value divider_count = 0;

  // Per divider: 3(B+2n)^2 flip-flops, (B+2n)^2 adders, (B+2n)^2 MUXes.
  Value divider_flipflops = 0;
  Value divider_additions = 0;
  Value divider_muxes = 0;

  Value total_flipflops = 0;  // register array + trees + dividers
};

ResourceReport resource_model(Method method, int n, int bits, int h = 0);

struct ParetoPoint {
  int h = 0;
  int k = 0;
  Value cycles = 0;
  ResourceReport resources;
};

// Strip heights H in {2, ..., (N-1)/2} with ceil(N/H) < ceil(N/(H-1)),
// ascending, costed for the scalable forward (or inverse) architecture.
std::vector<ParetoPoint> pareto_front(int n, int bits, bool inverse = false);

}  // namespace dprt
