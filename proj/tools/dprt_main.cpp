#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dprt/cost.hpp"
#include "dprt/io/pgm.hpp"
#include "dprt/io/report_file.hpp"
#include "dprt/io/sinogram.hpp"
#include "dprt/sim/forward.hpp"
#include "dprt/sim/inverse.hpp"
#include "dprt/verify.hpp"

namespace {

// Exit codes: 0 success, 1 input/configuration error, 2 verification or
// validity failure.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

struct SimulateArgs {
  std::string method;
  std::string in;
  std::string out;
  std::string report;
  std::string trace;
  std::string format = "json";
  int h = 0;
  bool use_mem_in = false;
};

void write_trace(const std::string& path,
                 const std::vector<std::string>& lines) {
  std::ostringstream text;
  for (const std::string& line : lines) text << line << '\n';
  dprt::io::write_text_file(path, text.str());
}

int cmd_simulate(const SimulateArgs& args) {
  const dprt::Method method = dprt::method_from_name(args.method);
  if (method == dprt::Method::serial || method == dprt::Method::systolic) {
    throw std::invalid_argument(
        "only sfdprt, fdprt, isfdprt and ifdprt can be simulated");
  }
  if (method_is_scalable(method)) {
    if (args.h < 2) {
      throw std::invalid_argument("scalable methods need -H >= 2");
    }
  } else if (args.h != 0) {
    throw std::invalid_argument("-H only applies to sfdprt/isfdprt");
  }
  if (args.use_mem_in && method != dprt::Method::isfdprt) {
    throw std::invalid_argument("--use-mem-in only applies to isfdprt");
  }

  dprt::sim::CycleReport report;
  std::vector<std::string> trace;
  bool matches_reference = false;

  if (!method_is_inverse(method)) {
    const dprt::Image img = dprt::io::read_pgm(args.in);
    const dprt::RadonArray reference = dprt::forward_dprt(img);
    auto run = method == dprt::Method::sfdprt
                   ? dprt::sim::run_sfdprt(img, args.h)
                   : dprt::sim::run_fdprt(img);
    matches_reference = run.radon == reference;
    report = run.report;
    trace = std::move(run.trace);
    if (!args.out.empty()) dprt::io::write_sinogram(args.out, run.radon);
  } else {
    const dprt::RadonArray radon = dprt::io::read_sinogram(args.in);
    const dprt::Image reference = dprt::inverse_dprt(radon);
    auto run = method == dprt::Method::isfdprt
                   ? dprt::sim::run_isfdprt(radon, args.h, args.use_mem_in)
                   : dprt::sim::run_ifdprt(radon);
    matches_reference = run.image == reference;
    report = run.report;
    trace = std::move(run.trace);
    if (!args.out.empty()) dprt::io::write_pgm(args.out, run.image);
  }

  const dprt::ResourceReport resources =
      dprt::resource_model(method, report.n, report.bits, report.h);
  const std::string text = dprt::io::simulation_report(
      report, resources, matches_reference ? "ok" : "mismatch",
      dprt::io::report_format_from_name(args.format));
  if (args.report.empty()) {
    std::cout << text;
  } else {
    dprt::io::write_text_file(args.report, text);
  }
  if (!args.trace.empty()) write_trace(args.trace, trace);
  if (!matches_reference) {
    std::cerr << "simulated output diverges from the reference transform\n";
    return kExitVerify;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact forward/inverse DPRT for prime-sized images: "
               "transforms, architecture simulation, cost models and "
               "Pareto exploration"};
  app.require_subcommand(1);

  // forward
  std::string fwd_in, fwd_out;
  int fwd_bits = 0;
  bool fwd_binary = false;
  auto* fwd = app.add_subcommand("forward", "DPRT of a PGM image");
  fwd->add_option("--in", fwd_in, "input PGM (P2 or P5)")->required();
  fwd->add_option("--out", fwd_out, "output sinogram path")->required();
  fwd->add_option("--bits", fwd_bits, "pixel width B (default from maxval)");
  fwd->add_flag("--binary", fwd_binary, "write the binary sinogram form");

  // inverse
  std::string inv_in, inv_out;
  auto* inv = app.add_subcommand("inverse", "inverse DPRT of a sinogram");
  inv->add_option("--in", inv_in, "input sinogram")->required();
  inv->add_option("--out", inv_out, "output PGM path")->required();

  // simulate
  SimulateArgs sim_args;
  auto* simc = app.add_subcommand(
      "simulate", "cycle-accurate architecture simulation");
  simc->add_option("--method", sim_args.method,
                   "sfdprt | fdprt | isfdprt | ifdprt")->required();
  simc->add_option("--in", sim_args.in,
                   "input PGM (forward) or sinogram (inverse)")->required();
  simc->add_option("--out", sim_args.out, "transform result path");
  simc->add_option("--report", sim_args.report,
                   "report path (stdout when omitted)");
  simc->add_option("--trace", sim_args.trace, "per-cycle trace path");
  simc->add_option("-H,--strip-height", sim_args.h, "strip height H");
  simc->add_flag("--use-mem-in", sim_args.use_mem_in,
                 "buffer the sinogram in MEM_IN (isfdprt)");
  simc->add_option("--format", sim_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // cost
  std::string cost_method, cost_out, cost_format = "json";
  int cost_n = 0, cost_bits = 8, cost_h = 0;
  bool cost_mem_in = false;
  auto* cost = app.add_subcommand("cost", "analytic cycle/resource model");
  cost->add_option("--method", cost_method,
                   "serial | systolic | sfdprt | fdprt | isfdprt | ifdprt")
      ->required();
  cost->add_option("--n", cost_n, "image side N (prime)")->required();
  cost->add_option("--bits", cost_bits, "pixel width B");
  cost->add_option("-H,--strip-height", cost_h, "strip height H");
  cost->add_flag("--use-mem-in", cost_mem_in,
                 "include MEM_IN buffering cycles (isfdprt)");
  cost->add_option("--out", cost_out, "report path (stdout when omitted)");
  cost->add_option("--format", cost_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // pareto
  int par_n = 0, par_bits = 8;
  std::string par_out;
  bool par_inverse = false;
  auto* par = app.add_subcommand("pareto",
                                 "Pareto front over strip heights (CSV)");
  par->add_option("--n", par_n, "image side N (prime)")->required();
  par->add_option("--bits", par_bits, "pixel width B");
  par->add_option("--out", par_out, "CSV path (stdout when omitted)");
  par->add_flag("--inverse", par_inverse, "cost the scalable inverse");

  // verify
  std::vector<int> ver_sides;
  int ver_bits = 8, ver_images = 3;
  std::string ver_policy = "front";
  std::uint64_t ver_seed = 0x1337c0de;
  bool ver_fault = false;
  auto* ver = app.add_subcommand("verify", "cross-module invariant suite");
  ver->add_option("--n", ver_sides, "image sides (prime)")->required();
  ver->add_option("--bits", ver_bits, "pixel width B");
  ver->add_option("--images", ver_images, "random images per side");
  ver->add_option("--h-policy", ver_policy, "all | front")
      ->check(CLI::IsMember({"all", "front"}));
  ver->add_option("--seed", ver_seed, "RNG seed");
  ver->add_flag("--inject-fault", ver_fault,
                "negative control: corrupt one check on purpose")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(fwd)) {
      const dprt::Image img = dprt::io::read_pgm(
          fwd_in, fwd_bits > 0 ? std::optional<int>(fwd_bits) : std::nullopt);
      dprt::io::write_sinogram(fwd_out, dprt::forward_dprt(img), fwd_binary);
      return kExitOk;
    }
    if (app.got_subcommand(inv)) {
      const dprt::RadonArray radon = dprt::io::read_sinogram(inv_in);
      dprt::io::write_pgm(inv_out, dprt::inverse_dprt(radon));
      return kExitOk;
    }
    if (app.got_subcommand(simc)) {
      return cmd_simulate(sim_args);
    }
    if (app.got_subcommand(cost)) {
      const dprt::Method method = dprt::method_from_name(cost_method);
      const dprt::Value cycles =
          dprt::cycle_model(method, cost_n, cost_bits, cost_h, cost_mem_in);
      const std::string text = dprt::io::cost_report(
          cycles, dprt::resource_model(method, cost_n, cost_bits, cost_h),
          cost_mem_in, dprt::io::report_format_from_name(cost_format));
      if (cost_out.empty()) {
        std::cout << text;
      } else {
        dprt::io::write_text_file(cost_out, text);
      }
      return kExitOk;
    }
    if (app.got_subcommand(par)) {
      const std::string text = dprt::io::pareto_csv(par_n, par_bits,
                                                    par_inverse);
      if (par_out.empty()) {
        std::cout << text;
      } else {
        dprt::io::write_text_file(par_out, text);
      }
      return kExitOk;
    }
    if (app.got_subcommand(ver)) {
      dprt::VerifyOptions options;
      options.sides = ver_sides;
      options.bits = ver_bits;
      options.images = ver_images;
      options.policy =
          ver_policy == "all" ? dprt::HPolicy::all : dprt::HPolicy::front;
      options.seed = ver_seed;
      options.inject_fault = ver_fault;
      const dprt::VerifyResult result = dprt::run_verification(options);
      for (const dprt::VerifyCheck& check : result.checks) {
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name;
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << '\n';
      }
      std::cout << (result.all_pass ? "all checks passed\n"
                                    : "checks FAILED\n");
      return result.all_pass ? kExitOk : kExitVerify;
    }
  } catch (const dprt::InvalidRadonArray& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
