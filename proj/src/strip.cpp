#include "dprt/strip.hpp"

#include <algorithm>

namespace dprt {

StripPlan make_strip_plan(int n, int h) {
  require(is_prime(n), "N must be prime");
  require(h >= 2 && h <= n, "strip height must satisfy 2 <= H <= N");
  StripPlan plan;
  plan.n = n;
  plan.h = h;
  plan.k = (n + h - 1) / h;
  plan.h_lat = ceil_log2(h);
  plan.lengths.assign(static_cast<std::size_t>(plan.k), h);
  // N - (K-1)H rather than <N>_H so that H = N degenerates to one full strip;
  // for H < N the two coincide because N is prime.
  plan.lengths.back() = n - (plan.k - 1) * h;
  int total = 0;
  for (int len : plan.lengths) total += len;
  internal_check(total == n, "strip lengths must cover N rows");
  return plan;
}

PartialRadon partial_dprt(const Image& img, const StripPlan& plan, int r) {
  require(img.side() == plan.n, "image does not match plan");
  require(r >= 0 && r < plan.k, "strip index out of range");
  const int n = plan.n;
  const int base = plan.row_base(r);
  const int len = plan.length(r);
  PartialRadon part{r, n, img.bits(), Grid(n + 1, n)};
  for (int m = 0; m < n; ++m) {
    auto acc = part.values.row(m);
    for (int i = 0; i < len; ++i) {
      const int q = base + i;
      const auto row = img.row(q);
      const int s = static_cast<int>(mod_index(Value{m} * q, n));
      for (int d = 0; d < n - s; ++d) acc[d] += row[d + s];
      for (int d = n - s; d < n; ++d) acc[d] += row[d + s - n];
    }
  }
  auto last = part.values.row(n);
  for (int d = 0; d < n; ++d) {
    Value sum = 0;
    for (int j = 0; j < len; ++j) sum += img(d, base + j);
    last[d] = sum;
  }
  return part;
}

RadonArray accumulate_partials(const StripPlan& plan,
                               std::span<const PartialRadon> parts) {
  require(static_cast<int>(parts.size()) == plan.k,
          "expected exactly one partial per strip");
  std::vector<bool> seen(static_cast<std::size_t>(plan.k), false);
  Grid total(plan.n + 1, plan.n);
  int bits = 0;
  for (const PartialRadon& part : parts) {
    require(part.n == plan.n, "partial does not match plan");
    require(part.strip >= 0 && part.strip < plan.k,
            "partial strip index out of range");
    require(!seen[static_cast<std::size_t>(part.strip)],
            "duplicate strip index");
    seen[static_cast<std::size_t>(part.strip)] = true;
    bits = part.bits_in;
    for (int m = 0; m <= plan.n; ++m) {
      auto dst = total.row(m);
      const auto src = part.values.row(m);
      for (int d = 0; d < plan.n; ++d) dst[d] += src[d];
    }
  }
  return RadonArray(plan.n, bits, std::move(total));
}

PartialBackprojection partial_idprt(const RadonArray& r, const StripPlan& plan,
                                    int strip) {
  require(r.side() == plan.n, "sinogram does not match plan");
  require(strip >= 0 && strip < plan.k, "strip index out of range");
  const int n = plan.n;
  const int base = plan.row_base(strip);
  const int len = plan.length(strip);
  PartialBackprojection part{strip, n, Grid(n, n)};
  for (int i = 0; i < n; ++i) {
    auto acc = part.values.row(i);
    for (int m = 0; m < len; ++m) {
      const int q = base + m;
      const auto row = r.row(q);
      const int sh = static_cast<int>(mod_index(Value{q} * i, n));
      for (int j = 0; j < sh; ++j) acc[j] += row[j - sh + n];
      for (int j = sh; j < n; ++j) acc[j] += row[j - sh];
    }
  }
  return part;
}

Image combine_partial_idprt(const StripPlan& plan,
                            std::span<const PartialBackprojection> parts,
                            const RadonArray& r) {
  require(r.side() == plan.n, "sinogram does not match plan");
  require(static_cast<int>(parts.size()) == plan.k,
          "expected exactly one partial per strip");
  std::vector<bool> seen(static_cast<std::size_t>(plan.k), false);
  const int n = plan.n;
  Grid sums(n, n);
  for (const PartialBackprojection& part : parts) {
    require(part.n == n, "partial does not match plan");
    require(part.strip >= 0 && part.strip < plan.k,
            "partial strip index out of range");
    require(!seen[static_cast<std::size_t>(part.strip)],
            "duplicate strip index");
    seen[static_cast<std::size_t>(part.strip)] = true;
    for (int i = 0; i < n; ++i) {
      auto dst = sums.row(i);
      const auto src = part.values.row(i);
      for (int j = 0; j < n; ++j) dst[j] += src[j];
    }
  }
  const Value s = total_sum(r, 0);
  const Value pixel_limit = (Value{1} << r.bits_in()) - 1;
  Grid px(n, n);
  for (int i = 0; i < n; ++i) {
    const Value rni = r(n, i);
    for (int j = 0; j < n; ++j) {
      const Value bracket = sums(i, j) - s + rni;
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
