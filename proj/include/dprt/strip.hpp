#pragma once

#include <vector>

#include "dprt/core.hpp"

namespace dprt {

// Decomposition of an N-row input into K = ceil(N/H) strips of H consecutive
// rows; the last strip keeps the N - (K-1)H remaining rows. With N prime and
// H < N the last strip is always short but never empty.
struct StripPlan {
  int n = 0;                 // image side
  int h = 0;                 // strip height H
  int k = 0;                 // strip count
  std::vector<int> lengths;  // L(r), r = 0..K-1
  int h_lat = 0;             // ceil_log2(H), the adder-tree latency

  int row_base(int r) const { return r * h; }
  int length(int r) const { return lengths[static_cast<std::size_t>(r)]; }
};

StripPlan make_strip_plan(int n, int h);

// One strip's contribution to the DPRT: for m < N,
// R'(r,m,d) = sum_{i<L(r)} f(i+rH, <d+m(i+rH)>_N); for m = N the partial row
// sums over columns rH .. rH+L(r)-1.
struct PartialRadon {
  int strip = 0;
  int n = 0;
  int bits_in = 0;
  Grid values;  // (N+1) x N
};

PartialRadon partial_dprt(const Image& img, const StripPlan& plan, int r);

// Sum of all K partials; equals forward_dprt of the source image.
RadonArray accumulate_partials(const StripPlan& plan,
                               std::span<const PartialRadon> parts);

// One strip's contribution to the inverse:
// f'(r,i,j) = sum_{m<L(r)} R(m+rH, <j - i(m+rH)>_N). The strip plan covers
// projection rows 0..N-1 only; row N enters in the combine step.
struct PartialBackprojection {
  int strip = 0;
  int n = 0;
  Grid values;  // N x N
};

PartialBackprojection partial_idprt(const RadonArray& r, const StripPlan& plan,
                                    int strip);

// f(i,j) = (1/N)[sum_r f'(r,i,j) - S + R(N,i)]; equals inverse_dprt(r).
Image combine_partial_idprt(const StripPlan& plan,
                            std::span<const PartialBackprojection> parts,
                            const RadonArray& r);

}  // namespace dprt
