#include "dprt/io/sinogram.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace dprt::io {

namespace {

int value_record_bytes(int n, int bits) {
  return (bits + ceil_log2(n) + 7) / 8;
}

Value parse_value(std::string_view token) {
  Value v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  require(ec == std::errc{} && ptr == token.data() + token.size() && v >= 0,
          "bad sinogram value: " + std::string(token));
  return v;
}

}  // namespace

void write_sinogram(const std::filesystem::path& path, const RadonArray& r,
                    bool binary) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot open " + path.string() + " for writing");
  const int n = r.side();
  out << "DPRT " << (binary ? "v1b" : "v1") << " N=" << n << " B=" << r.bits_in()
      << "\n";
  if (!binary) {
    for (int m = 0; m <= n; ++m) {
      const auto row = r.row(m);
      for (int d = 0; d < n; ++d) {
        if (d > 0) out << ',';
        out << row[d];
      }
      out << '\n';
    }
  } else {
    const int rec = value_record_bytes(n, r.bits_in());
    std::vector<char> raw;
    raw.reserve(static_cast<std::size_t>(n + 1) * n * rec);
    for (int m = 0; m <= n; ++m) {
      for (int d = 0; d < n; ++d) {
        Value v = r(m, d);
        for (int b = 0; b < rec; ++b) {
          raw.push_back(static_cast<char>(v & 0xff));
          v >>= 8;
        }
      }
    }
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  }
  require(out.good(), "failed writing " + path.string());
}

RadonArray read_sinogram(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path.string());
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), "empty sinogram file");
  bool binary = false;
  std::string_view rest(header);
  if (rest.starts_with("DPRT v1b ")) {
    binary = true;
    rest.remove_prefix(9);
  } else if (rest.starts_with("DPRT v1 ")) {
    rest.remove_prefix(8);
  } else {
    throw std::invalid_argument("not a sinogram file (bad header)");
  }
  require(rest.starts_with("N="), "bad sinogram header");
  rest.remove_prefix(2);
  const auto space = rest.find(' ');
  require(space != std::string_view::npos, "bad sinogram header");
  const Value n_val = parse_value(rest.substr(0, space));
  rest.remove_prefix(space + 1);
  require(rest.starts_with("B="), "bad sinogram header");
  rest.remove_prefix(2);
  const Value b_val = parse_value(rest);
  require(n_val >= 2 && n_val <= 1 << 20, "bad sinogram side");
  require(is_prime(n_val), "N must be prime");
  require(b_val >= 1 && b_val <= 32, "bad sinogram width");
  const int n = static_cast<int>(n_val);
  const int bits = static_cast<int>(b_val);

  Grid values(n + 1, n);
  if (!binary) {
    std::string line;
    for (int m = 0; m <= n; ++m) {
      require(static_cast<bool>(std::getline(in, line)),
              "sinogram truncated at row " + std::to_string(m));
      std::string_view sv(line);
      if (sv.ends_with("\r")) sv.remove_suffix(1);
      for (int d = 0; d < n; ++d) {
        const auto comma = sv.find(',');
        const bool last = d == n - 1;
        require(last == (comma == std::string_view::npos),
                "wrong value count in sinogram row " + std::to_string(m));
        values(m, d) = parse_value(last ? sv : sv.substr(0, comma));
        if (!last) sv.remove_prefix(comma + 1);
      }
    }
  } else {
    const int rec = value_record_bytes(n, bits);
    std::vector<char> raw(static_cast<std::size_t>(n + 1) * n * rec);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    require(in.gcount() == static_cast<std::streamsize>(raw.size()),
            "sinogram truncated");
    const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
    std::size_t at = 0;
    for (int m = 0; m <= n; ++m) {
      for (int d = 0; d < n; ++d) {
        Value v = 0;
        for (int b = rec - 1; b >= 0; --b) {
          v = (v << 8) | bytes[at + static_cast<std::size_t>(b)];
        }
        values(m, d) = v;
        at += static_cast<std::size_t>(rec);
      }
    }
  }
  // Range validation happens in the RadonArray constructor.
  return RadonArray(n, bits, std::move(values));
}

}  // namespace dprt::io
