#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "minsub/io.hpp"
#include "minsub/polyhedra.hpp"

namespace minsub::cli {

enum class ExitCode : int { ok = 0, violation = 1, input_error = 2 };
enum class Format { json, text };

struct CommandRequest {
  std::string subcommand;  // polar gauge rho verify cut check-cut sfree maximal
  std::string input_path;  // may be empty for `verify --random`
  long radius = kDefaultRadius;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t random_instances = 0;
  std::size_t candidates = 10;  // random_valid_C draws per instance in verify
  Format format = Format::json;
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
ExitCode run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Serializes a report in the requested format with a trailing newline.
std::string emit_report(const io::Json& report, Format format);

struct SuiteOptions {
  std::size_t samples = 200;
  std::size_t candidates = 10;
};

/// Sandwich, reconstruction, not-in-recession and exposed-witness checks on
/// one instance. The returned object has "passed" and "violations" keys.
io::Json verify_instance(const HPolyhedron& h, std::uint64_t seed, const SuiteOptions& options);

}  // namespace minsub::cli
