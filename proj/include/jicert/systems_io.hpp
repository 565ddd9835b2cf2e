#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jicert/certifier.hpp"
#include "jicert/system.hpp"

namespace jicert {

inline constexpr char const *kToolVersion = "1.0.0";
inline constexpr char const *kSystemFormat = "jicert-system/1";
inline constexpr char const *kReportFormat = "jicert-report/1";

/// Malformed input text. Syntax errors carry a 1-based line and column;
/// schema errors carry the JSON path of the offending value and line 0.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t line, std::size_t column)
  : Error(what), line_(line), column_(column)
  {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads a system file and validates it (see validate_prefix). Structural
/// problems throw ParseError; mathematical ones throw PreconditionError or
/// InvalidHomomorphism.
SystemPrefix parse_system(std::string_view text, std::uint64_t dense_bound = kDefaultDenseBound);
std::string emit_system(SystemPrefix const &prefix);

struct WreathLayer
{
  std::string group;
  /// Degree of the action; 0 accepts the library group's natural degree.
  std::size_t degree = 0;
};

/// "S3:3" or "S3:3,A5:5"; the degree may be omitted.
std::vector<WreathLayer> parse_wreath_spec(std::string const &spec);

/// Stage 0 is the first layer's group; stage n+1 is layer (n+1) wr stage n,
/// where the layers cycle when fewer than `depth` are given. Each map is the
/// action on blocks, so its kernel is the deepest base power. Stages whose
/// order exceeds `dense_bound` are held in chain mode when `allow_chain`,
/// otherwise DenseBoundExceeded is thrown.
SystemPrefix build_wreath_tower(std::vector<WreathLayer> const &layers, std::size_t depth,
                                bool allow_chain = false,
                                std::uint64_t dense_bound = kDefaultDenseBound);

struct ReportOptions
{
  bool wilson = false;
  bool star = false;
  bool thmb = false;
  std::uint64_t subgroup_bound = kDefaultSubgroupBound;
  std::uint64_t dense_bound = kDefaultDenseBound;
  std::uint64_t seed = 0;
  /// Comma-separated class members, empty when no class was given.
  std::string simple_class;
  friend bool operator==(ReportOptions const &, ReportOptions const &) = default;
};

struct CertificateReport
{
  std::string tool_version = kToolVersion;
  /// "sha256:" followed by the hex digest of the input file.
  std::string input_digest;
  ReportOptions options;
  SystemVerdict verdict;
  friend bool operator==(CertificateReport const &, CertificateReport const &) = default;
};

enum class ReportFormat
{
  json,
  text
};

/// Deterministic: JSON object keys are sorted and no clock is read.
std::string emit_report(CertificateReport const &report, ReportFormat format = ReportFormat::json);
CertificateReport parse_report(std::string_view json_text);

std::string sha256_hex(std::string_view bytes);

} // namespace jicert
