#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "janus/grid.hpp"

namespace janus {

inline constexpr const char* kEngineVersion = "0.1.0";

struct ScanMeta {
  std::string timestamp;  // ISO-8601 UTC
  std::string engine_version = kEngineVersion;
  Tolerances tol{};
};

/// Gridded g² with infeasible points kept as empty optionals.
struct ScanResult {
  GridSpec spec;
  Formula formula = Formula::General;
  std::vector<std::optional<double>> values;  // row-major, axes in declaration order
  std::vector<PointStatus> status;            // parallel to values
  ScanMeta meta;

  std::optional<double> min_value() const;
};

ScanResult run_scan(const GridSpec& spec, Formula formula, const Tolerances& tol = {});

enum class ScanFormat { Csv, Json };

ScanFormat format_from_string(const std::string& name);
/// Format implied by a path's extension (.csv / .json).
ScanFormat format_from_path(const std::filesystem::path& path);

void write_scan(const ScanResult& result, std::ostream& os, ScanFormat format);
void write_scan(const ScanResult& result, const std::filesystem::path& path, ScanFormat format);

ScanResult read_scan(std::istream& is, ScanFormat format);
ScanResult read_scan(const std::filesystem::path& path, ScanFormat format);

/// Reproduction domains for the figure presets: "1", "2a", "2b", "3a".."3d",
/// "4", "5" and "5c" (Δ = δ = π/2 companion of 4).
struct ScanPreset {
  GridSpec spec;
  Formula formula;
};

ScanPreset figure_preset(const std::string& id, int points = 256);
std::vector<std::string> figure_preset_ids();

}  // namespace janus
