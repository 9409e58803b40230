#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/coxeter/coxeter_type.hpp"
#include "coxlat/identities/identities.hpp"

namespace coxlat::cli {

enum class Command { Verify, Orbits, Charpoly, Lattice };
enum class OutputFormat { Table, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Cap used with --big when no larger --cap is given.
inline constexpr std::size_t kBigCap = 3'000'000;

struct RunConfig {
  CoxeterType type;
  Command command = Command::Verify;
  /// Canonical identity names (no "all").
  std::vector<std::string> identities;
  OutputFormat output = OutputFormat::Table;
  bool big = false;
  std::optional<std::size_t> cap;
  std::optional<std::string> subset;
  unsigned threads = 1;
  bool timing = false;
};

/// FACTOR ("x" FACTOR)*, FACTOR = letter + rank | "I2(" m ")",
/// case-insensitive; C_n is read as B_n. Throws InvalidType.
CoxeterType parse_type(const std::string& text);

/// Comma-separated identity names; "all" expands to every identity.
/// Throws std::invalid_argument for an unknown name.
std::vector<std::string> parse_identities(const std::string& text);

Command parse_command(const std::string& text);
OutputFormat parse_output(const std::string& text);

/// kExitOk when every report holds, kExitMismatch otherwise.
int exit_code(const std::vector<IdentityReport>& reports);

/// Runs one command and writes the report to out and diagnostics to err.
/// Returns kExitOk, kExitMismatch or kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Report rendering, exposed for tests.
std::string render_verify(const RunConfig& config, const Analysis& a, const std::vector<IdentityReport>& reports,
                          std::optional<double> total_ms);
std::string csv_quote(const std::string& field);

}  // namespace coxlat::cli
