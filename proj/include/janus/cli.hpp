#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "janus/error.hpp"
#include "janus/params.hpp"
#include "janus/scan.hpp"

namespace janus {

/// Environment variable holding the default output directory.
inline constexpr const char* kOutDirEnv = "JANUS_OUT_DIR";

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalid = 2,
  kExitUndefined = 3,
  kExitIo = 4,
};

struct CliConfig {
  Tolerances tol{};
  std::optional<int> cutoff;  // empty: choose from the tail bound
  std::filesystem::path out_dir;
  ScanFormat format = ScanFormat::Csv;
  int points = 256;

  /// Applies one `key = value` setting. Keys: tol.norm, tol.oracle, tol.tail,
  /// cutoff (integer or "auto"), out_dir, format, points.
  void set(std::string_view key, std::string_view value);
  /// Reads `key = value` lines; '#' starts a comment.
  void load_file(const std::filesystem::path& path);
  void validate() const;
};

/// Radians, or the shorthands pi, -pi, pi/2, 2pi, 3pi/2 and similar k·pi/m.
double parse_angle(std::string_view text);

/// Map an engine error onto the process exit code.
int exit_code_for(ErrorKind kind);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace janus
