#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace cy5::cli {

enum class Command { LocalP2, Hypersurface, VerifyLocalization, VerifyMartin };
enum class Format { Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct RunConfig {
  Command command = Command::LocalP2;
  std::optional<int> max_degree;  // hypersurface defaults to the file's range
  std::filesystem::path input;
  Format format = Format::Csv;
  std::uint64_t seed = 20240601;
  int jobs = 1;
  int meeting_table = 0;
  std::filesystem::path output;  // empty: standard output
};

/// Either a validated config or the exit code to return (help text and
/// usage errors have already been written to out/err).
std::variant<RunConfig, int> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_local_p2(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_hypersurface(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_localization(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_martin(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command and maps library exceptions onto exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, opening --output if given.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cy5::cli
