#ifndef PLUCKER_CLI_HPP
#define PLUCKER_CLI_HPP

#include "plucker/duality.hpp"
#include "plucker/error.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plucker::cli {

using Json = nlohmann::ordered_json;

/// A variety as read from JSON; variables are implicitly x0..xn.
struct VarietySpec {
    std::size_t ambient_dim = 0;
    std::string kind; // "hypersurface" | "linear" | "point"
    std::optional<std::string> polynomial;
    std::optional<std::size_t> linear_dim;
};

VarietySpec variety_spec_from_json(const Json& j);
Json to_json(const VarietySpec& spec);
VarietySpec load_variety_spec(const std::filesystem::path& file);

/// Validates the description and builds the variety.
ProjVariety build_variety(const VarietySpec& spec);

/// One suite entry. `inputs` keeps the raw JSON; variety references are
/// either inline objects or paths relative to `base_dir`.
struct SuiteCase {
    std::string name;
    std::string kind;
    Json inputs;
    Json expected; // object of name -> "p/q", possibly empty
    bool slow = false;
    std::filesystem::path base_dir;
};

struct SuiteConfig {
    std::vector<SuiteCase> cases;
};

SuiteConfig suite_from_json(const Json& j, const std::filesystem::path& base_dir);
SuiteConfig load_suite(const std::filesystem::path& file);

using Values = std::vector<std::pair<std::string, std::string>>;

struct CaseReport {
    std::string name;
    std::string kind;
    Values computed;
    Values expected;
    bool pass = false;
    bool skipped = false;
    std::optional<std::string> error;
    std::optional<ErrorKind> error_kind;
    double wall_ms = 0.0;
};

struct RunOptions {
    bool include_slow = false;
    unsigned jobs = 1;
};

CaseReport run_case(const SuiteCase& c, const RunOptions& opts = {});

/// Runs every case with at most `opts.jobs` in flight; the result order is
/// the config order.
std::vector<CaseReport> run_suite(const SuiteConfig& suite, const RunOptions& opts);

/// 0 all pass, 1 any failure, 2 any input error.
int exit_code(const std::vector<CaseReport>& reports);

bool is_input_error(ErrorKind kind);

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

/// Serializes the reports. Wall times are only written when requested so
/// that default output is reproducible byte for byte.
void emit_report(const std::vector<CaseReport>& reports, Format format, std::ostream& out,
                 bool with_timings = false);
std::string emit_report(const std::vector<CaseReport>& reports, Format format, bool with_timings = false);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& s);

/// Jobs from PLUCKER_JOBS, else 1.
unsigned default_jobs();

} // namespace plucker::cli

#endif
