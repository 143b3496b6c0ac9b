#pragma once

// The tate command line: configuration, running a command into a Report, and
// rendering reports as text, JSON or CSV.

#include "tate/resolve.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tate::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// Bad flags or a violated dimension guard; exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    /// "resolve", "terms", "schur", "cohomology-table", "bbw" or "weyl-dim".
    std::string command;
    /// Map kind for resolve and terms.
    std::string kind;
    int dim_a = 0;
    int dim_b = 0;
    int dim_w = 0;
    std::vector<int> weight;
    std::vector<int> partition;
    int p_min = -3;
    int p_max = 4;
    std::uint32_t prime = la::kDefaultPrime;
    std::uint64_t seed = 0;
    int retries = 3;
    bool force = false;
    /// "closed-form" or "cohomology"; what resolve compares against.
    std::string predictor = "closed-form";
    Format format = Format::text;
};

/// "a:b" -> (a, b).
std::pair<int, int> parse_range(const std::string& text);
/// "1,-2,3" -> {1, -2, 3}.
std::vector<int> parse_int_list(const std::string& text);

struct Entry {
    int omega_twist;
    std::uint64_t rank;
    bool operator==(const Entry&) const = default;
};

struct Row {
    int p;
    std::optional<std::vector<Entry>> predicted;
    std::optional<std::vector<Entry>> computed;
    /// Present when both sides are.
    std::optional<bool> match;
    bool operator==(const Row&) const = default;
};

struct Exactness {
    bool d2 = true;
    bool interior = true;
    bool minimal = true;
    bool seed_minimal = true;
    bool operator==(const Exactness&) const = default;
};

struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Row> rows;
    std::optional<Exactness> exactness;
    std::uint64_t seed = 0;
    std::uint32_t field = la::kDefaultPrime;
    std::string status = "PASS";
    /// Seeds tried, in order (resolve of random maps only).
    std::vector<std::uint64_t> attempts;
    /// Command-specific results (bbw, weyl-dim, cohomology-table, koszul, ...).
    Json details = Json::object();
    /// Wall time; shown in text output only so JSON stays reproducible.
    double seconds = 0;

    bool operator==(const Report& o) const
    {
        return command == o.command && params == o.params && rows == o.rows && exactness == o.exactness &&
               seed == o.seed && field == o.field && status == o.status && attempts == o.attempts &&
               details == o.details;
    }
};

/// 0 when every comparison passes, 1 on a mismatch or failed check.
int exit_code(const Report& report);

/// Throws UsageError for invalid configurations.
Report run(const RunConfig& config);

Json to_json(const Report& report);
Report from_json(const Json& j);

std::string emit(const Report& report, Format format);

/// Parses argv, runs and writes the report; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tate::cli
