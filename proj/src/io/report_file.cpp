#include "dprt/io/report_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dprt::io {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json resources_json(const ResourceReport& r) {
  ordered_json j;
  j["register_array_bits"] = r.register_array_bits;
  j["adder_tree_flipflops"] = r.adder_tree_flipflops;
  j["one_bit_additions"] = r.one_bit_additions;
  j["ram_bits"] = r.ram_bits;
  if (r.mux_known) {
    j["mux_count"] = r.mux_count;
  } else {
    j["mux_count"] = "unknown";
  }
  j["divider_count"] = r.divider_count;
  j["divider_flipflops"] = r.divider_flipflops;
  j["divider_additions"] = r.divider_additions;
  j["divider_muxes"] = r.divider_muxes;
  j["total_flipflops"] = r.total_flipflops;
  return j;
}

void resources_csv(std::ostringstream& out, const ResourceReport& r) {
  out << "resources.register_array_bits," << r.register_array_bits << '\n'
      << "resources.adder_tree_flipflops," << r.adder_tree_flipflops << '\n'
      << "resources.one_bit_additions," << r.one_bit_additions << '\n'
      << "resources.ram_bits," << r.ram_bits << '\n'
      << "resources.mux_count,";
  if (r.mux_known) {
    out << r.mux_count;
  } else {
    out << "unknown";
  }
  out << '\n'
      << "resources.divider_count," << r.divider_count << '\n'
      << "resources.divider_flipflops," << r.divider_flipflops << '\n'
      << "resources.divider_additions," << r.divider_additions << '\n'
      << "resources.divider_muxes," << r.divider_muxes << '\n'
      << "resources.total_flipflops," << r.total_flipflops << '\n';
}

ordered_json config_json(const std::string& method, int n, int bits, int h,
                         bool scalable, bool use_mem_in) {
  ordered_json j;
  j["method"] = method;
  ordered_json cfg;
  cfg["n"] = n;
  cfg["bits"] = bits;
  if (scalable) cfg["h"] = h;
  cfg["use_mem_in"] = use_mem_in;
  j["config"] = cfg;
  return j;
}

}  // namespace

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string simulation_report(const sim::CycleReport& cycles,
                              const ResourceReport& resources,
                              const std::string& verification,
                              ReportFormat format) {
  const bool scalable = cycles.h > 0;
  if (format == ReportFormat::json) {
    ordered_json j = config_json(cycles.method, cycles.n, cycles.bits,
                                 cycles.h, scalable, cycles.use_mem_in);
    ordered_json cy;
    cy["total"] = cycles.total;
    for (const auto& [name, count] : cycles.phases) cy[name] = count;
    j["cycles"] = cy;
    j["resources"] = resources_json(resources);
    j["verification"] = verification;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "method," << cycles.method << '\n'
      << "n," << cycles.n << '\n'
      << "bits," << cycles.bits << '\n';
  if (scalable) out << "h," << cycles.h << '\n';
  out << "use_mem_in," << (cycles.use_mem_in ? 1 : 0) << '\n'
      << "cycles.total," << cycles.total << '\n';
  for (const auto& [name, count] : cycles.phases) {
    out << "cycles." << name << ',' << count << '\n';
  }
  resources_csv(out, resources);
  out << "verification," << verification << '\n';
  return out.str();
}

std::string cost_report(Value cycles, const ResourceReport& resources,
                        bool use_mem_in, ReportFormat format) {
  const bool scalable = method_is_scalable(resources.method);
  const std::string method = method_name(resources.method);
  if (format == ReportFormat::json) {
    ordered_json j = config_json(method, resources.n, resources.bits,
                                 resources.h, scalable, use_mem_in);
    j["cycles"] = ordered_json{{"total", cycles}};
    j["resources"] = resources_json(resources);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "method," << method << '\n'
      << "n," << resources.n << '\n'
      << "bits," << resources.bits << '\n';
  if (scalable) out << "h," << resources.h << '\n';
  out << "use_mem_in," << (use_mem_in ? 1 : 0) << '\n'
      << "cycles.total," << cycles << '\n';
  resources_csv(out, resources);
  return out.str();
}

std::string pareto_csv(int n, int bits, bool inverse) {
  std::ostringstream out;
  out << "method,h,k,cycles,total_flipflops,one_bit_additions,ram_bits,muxes\n";
  auto row = [&out](const ResourceReport& r, int h, int k, Value cycles) {
    out << method_name(r.method) << ',';
    if (h > 0) out << h;
    out << ',';
    if (k > 0) out << k;
    out << ',' << cycles << ',' << r.total_flipflops << ','
        << r.one_bit_additions << ',' << r.ram_bits << ',';
    if (r.mux_known) {
      out << r.mux_count;
    } else {
      out << "unknown";
    }
    out << '\n';
  };
  for (const ParetoPoint& p : pareto_front(n, bits, inverse)) {
    row(p.resources, p.h, p.k, p.cycles);
  }
  if (!inverse) {
    row(resource_model(Method::serial, n, bits), 0, 0,
        cycle_model(Method::serial, n, bits));
    row(resource_model(Method::systolic, n, bits), 0, 0,
        cycle_model(Method::systolic, n, bits));
    row(resource_model(Method::fdprt, n, bits), 0, 0,
        cycle_model(Method::fdprt, n, bits));
  } else {
    row(resource_model(Method::ifdprt, n, bits), 0, 0,
        cycle_model(Method::ifdprt, n, bits));
  }
  return out.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "cannot open " + path.string() + " for writing");
  out << content;
  require(out.good(), "failed writing " + path.string());
}

}  // namespace dprt::io
