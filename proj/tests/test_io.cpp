#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "dprt/io/pgm.hpp"
#include "dprt/io/report_file.hpp"
#include "dprt/io/sinogram.hpp"
#include "dprt/sim/forward.hpp"
#include "dprt/verify.hpp"

namespace fs = std::filesystem;
using dprt::Grid;
using dprt::Image;
using dprt::RadonArray;
using dprt::Value;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dprt-io-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path file(const std::string& name) const { return path / name; }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("ASCII PGM parsing with comments") {
  TempDir tmp;
  const fs::path p = tmp.file("a.pgm");
  std::ofstream(p) << "P2\n# running example\n3 3\n# another comment\n15\n"
                      "1 2 3\n4 5 6\n7 8 9\n";
  const Image img = dprt::io::read_pgm(p);
  CHECK(img.side() == 3);
  CHECK(img.bits() == 4);
  CHECK(img(2, 1) == 8);
  // Explicit width overrides the maxval default.
  const Image wide = dprt::io::read_pgm(p, 8);
  CHECK(wide.bits() == 8);
}

TEST_CASE("PGM round trips through P5") {
  TempDir tmp;
  for (int bits : {8, 12}) {
    const Image img = dprt::random_image(7, bits, 17 + bits);
    const fs::path p = tmp.file("b" + std::to_string(bits) + ".pgm");
    dprt::io::write_pgm(p, img);
    CHECK(dprt::io::read_pgm(p) == img);
    // write is deterministic
    const fs::path q = tmp.file("c.pgm");
    dprt::io::write_pgm(q, img);
    CHECK(slurp(p) == slurp(q));
  }
}

TEST_CASE("PGM rejects bad rasters") {
  TempDir tmp;
  const fs::path square = tmp.file("nonprime.pgm");
  std::ofstream(square) << "P2\n4 4\n255\n" << std::string(4 * 4, '1' ) << "\n";
  CHECK_THROWS_WITH_AS(dprt::io::read_pgm(square), "N must be prime",
                       std::invalid_argument);
  const fs::path rect = tmp.file("rect.pgm");
  std::ofstream(rect) << "P2\n3 5\n255\n";
  CHECK_THROWS_AS(dprt::io::read_pgm(rect), std::invalid_argument);
  const fs::path truncated = tmp.file("short.pgm");
  std::ofstream(truncated) << "P5\n3 3\n255\nab";
  CHECK_THROWS_AS(dprt::io::read_pgm(truncated), std::invalid_argument);
  const fs::path overflow = tmp.file("over.pgm");
  std::ofstream(overflow) << "P2\n3 3\n15\n1 2 3 4 5 6 7 8 99\n";
  CHECK_THROWS_AS(dprt::io::read_pgm(overflow), std::invalid_argument);
}

TEST_CASE("sinogram text form") {
  TempDir tmp;
  const Image img = dprt::random_image(5, 8, 5);
  const RadonArray radon = dprt::forward_dprt(img);
  const fs::path p = tmp.file("s.dprt");
  dprt::io::write_sinogram(p, radon);
  const std::string text = slurp(p);
  CHECK(text.starts_with("DPRT v1 N=5 B=8\n"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // header + 6 rows
  CHECK(dprt::io::read_sinogram(p) == radon);
}

TEST_CASE("sinogram binary form") {
  TempDir tmp;
  for (int n : {5, 13}) {
    const Image img = dprt::random_image(n, 8, 50 + n);
    const RadonArray radon = dprt::forward_dprt(img);
    const fs::path p = tmp.file("bin.dprt");
    dprt::io::write_sinogram(p, radon, /*binary=*/true);
    CHECK(slurp(p).starts_with("DPRT v1b"));
    CHECK(dprt::io::read_sinogram(p) == radon);
  }
}

TEST_CASE("sinogram rejects malformed input") {
  TempDir tmp;
  auto write = [&](const std::string& name, const std::string& body) {
    const fs::path p = tmp.file(name);
    std::ofstream(p) << body;
    return p;
  };
  CHECK_THROWS_AS(dprt::io::read_sinogram(write("h", "bogus\n")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dprt::io::read_sinogram(write("n", "DPRT v1 N=4 B=8\n")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      dprt::io::read_sinogram(write("t", "DPRT v1 N=3 B=8\n1,2,3\n")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      dprt::io::read_sinogram(
          write("c", "DPRT v1 N=3 B=8\n1,2\n1,2,3\n1,2,3\n1,2,3\n")),
      std::invalid_argument);
  // Out-of-range coefficient: 3 * (2^1 - 1) = 3 is the widest legal value.
  CHECK_THROWS_AS(
      dprt::io::read_sinogram(
          write("w", "DPRT v1 N=3 B=1\n9,0,0\n0,0,0\n0,0,0\n0,0,0\n")),
      std::invalid_argument);
}

TEST_CASE("reports serialize byte-stably") {
  const Image img = dprt::random_image(7, 8, 9);
  const auto run = dprt::sim::run_sfdprt(img, 2);
  const auto resources = dprt::resource_model(dprt::Method::sfdprt, 7, 8, 2);
  for (auto format : {dprt::io::ReportFormat::json, dprt::io::ReportFormat::csv}) {
    const std::string a =
        dprt::io::simulation_report(run.report, resources, "ok", format);
    const std::string b =
        dprt::io::simulation_report(run.report, resources, "ok", format);
    CHECK(a == b);
    CHECK(a.find("73") != std::string::npos);
  }
  const std::string csv = dprt::io::simulation_report(
      run.report, resources, "ok", dprt::io::ReportFormat::csv);
  CHECK(csv.find("cycles.total,73\n") != std::string::npos);
  CHECK(csv.find("verification,ok\n") != std::string::npos);
}

TEST_CASE("pareto CSV carries the paper's anchor rows") {
  const std::string csv = dprt::io::pareto_csv(251, 8, false);
  CHECK(csv.find("sfdprt,84,3,1777,") != std::string::npos);
  CHECK(csv.find("systolic,,,63253,516096,") != std::string::npos);
  CHECK(csv.find("fdprt,,,511,") != std::string::npos);
  CHECK(csv.find(",unknown\n") != std::string::npos);

  // N=5 has exactly one front row.
  const std::string small = dprt::io::pareto_csv(5, 8, false);
  CHECK(std::count(small.begin(), small.end(), '\n') == 5);  // header+1+3 baselines
  CHECK(small.find("sfdprt,2,3,") != std::string::npos);
}

TEST_CASE("cost report includes cycles and resources") {
  const auto resources = dprt::resource_model(dprt::Method::systolic, 251, 8);
  const std::string json = dprt::io::cost_report(
      63253, resources, false, dprt::io::ReportFormat::json);
  CHECK(json.find("\"total\": 63253") != std::string::npos);
  CHECK(json.find("\"total_flipflops\": 516096") != std::string::npos);
  CHECK(json.find("\"mux_count\": \"unknown\"") != std::string::npos);
}
