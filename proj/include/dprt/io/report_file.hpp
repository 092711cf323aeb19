#pragma once

#include <string>

#include "dprt/cost.hpp"
#include "dprt/sim/report.hpp"

namespace dprt::io {

enum class ReportFormat { json, csv };

ReportFormat report_format_from_name(const std::string& name);

// Simulation report: method, configuration, cycle breakdown, the analytic
// resource counts for the same configuration stated by the cost model, and a
// verification status line. Output is byte-stable for identical inputs.
std::string simulation_report(const sim::CycleReport& cycles,
                              const ResourceReport& resources,
                              const std::string& verification,
                              ReportFormat format);

// Analytic cost report for one (method, N, B, H) configuration.
std::string cost_report(Value cycles, const ResourceReport& resources,
                        bool use_mem_in, ReportFormat format);

// Pareto front as CSV: one row per front point (H, K, cycles, flip-flops,
// adders, RAM bits, MUXes) followed by the serial, systolic and fast-path
// baseline rows.
std::string pareto_csv(int n, int bits, bool inverse);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace dprt::io
