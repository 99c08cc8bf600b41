#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace clonesim::cli {

inline constexpr const char* kSchemaVersion = "1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameterError = 2;
inline constexpr int kExitConsistencyFailure = 3;

/// |z| above which `simulate --strict` exits with kExitConsistencyFailure.
inline constexpr double kStrictZScore = 6.0;

enum class Format { kText, kCsv, kJson };

using Value = std::variant<std::int64_t, double, std::string, bool>;

struct Provenance {
  std::uint64_t seed;
  std::uint64_t samples;
};

/// Everything a command emits, independent of output format.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::pair<std::string, Value>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
  std::optional<Provenance> provenance;
};

/// CSV carries only the result table: one header row, LF line endings.
std::string render(const OutputRecord& record, Format format, int digits);

/// Parses and runs one invocation; `args[0]` is the program name.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clonesim::cli
