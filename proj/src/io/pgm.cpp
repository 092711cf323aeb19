#include "dprt/io/pgm.hpp"

#include <fstream>
#include <string>

namespace dprt::io {

namespace {

// PNM token scanner: skips whitespace and '#' comments.
class PnmScanner {
 public:
  explicit PnmScanner(std::istream& in) : in_(in) {}

  std::string token() {
    std::string tok;
    int c;
    while ((c = in_.get()) != EOF) {
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n') {
        }
        continue;
      }
      if (std::isspace(c)) {
        if (!tok.empty()) return tok;
        continue;
      }
      tok.push_back(static_cast<char>(c));
    }
    require(!tok.empty(), "unexpected end of PGM header");
    return tok;
  }

  long long number() {
    const std::string tok = token();
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      require(used == tok.size() && v >= 0, "bad number in PGM: " + tok);
      return v;
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad number in PGM: " + tok);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("bad number in PGM: " + tok);
    }
  }

 private:
  std::istream& in_;
};

}  // namespace

Image read_pgm(const std::filesystem::path& path, std::optional<int> bits) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open " + path.string());
  PnmScanner scan(in);
  const std::string magic = scan.token();
  require(magic == "P2" || magic == "P5", "not a PGM file (expected P2 or P5)");
  const long long width = scan.number();
  const long long height = scan.number();
  const long long maxval = scan.number();
  require(width == height, "image must be square");
  require(maxval >= 1 && maxval <= 65535, "unsupported PGM maxval");
  require(is_prime(width), "N must be prime");

  const int n = static_cast<int>(width);
  const int b = bits ? *bits : ceil_log2(maxval + 1);
  Grid px(n, n);
  if (magic == "P2") {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) px(i, j) = scan.number();
    }
  } else {
    // P5: single whitespace after maxval, then raw samples.
    const int sample_bytes = maxval > 255 ? 2 : 1;
    std::vector<char> raw(static_cast<std::size_t>(n) * n * sample_bytes);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    require(in.gcount() == static_cast<std::streamsize>(raw.size()),
            "truncated PGM raster");
    const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::size_t at =
            (static_cast<std::size_t>(i) * n + j) * sample_bytes;
        px(i, j) = sample_bytes == 2
                       ? (Value{bytes[at]} << 8) | bytes[at + 1]
                       : Value{bytes[at]};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      require(px(i, j) <= maxval, "pixel exceeds PGM maxval");
    }
  }
  return Image(n, b, std::move(px));
}

void write_pgm(const std::filesystem::path& path, const Image& img) {
  require(img.bits() <= 16, "PGM supports at most 16-bit pixels");
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot open " + path.string() + " for writing");
  const int n = img.side();
  const Value maxval = img.max_pixel();
  out << "P5\n" << n << ' ' << n << '\n' << maxval << '\n';
  const int sample_bytes = maxval > 255 ? 2 : 1;
  std::vector<char> raw;
  raw.reserve(static_cast<std::size_t>(n) * n * sample_bytes);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Value v = img(i, j);
      if (sample_bytes == 2) raw.push_back(static_cast<char>((v >> 8) & 0xff));
      raw.push_back(static_cast<char>(v & 0xff));
    }
  }
  out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
  require(out.good(), "failed writing " + path.string());
}

}  // namespace dprt::io
