#pragma once

#include "lps/lattice.hpp"
#include "lps/polytope.hpp"
#include "lps/statistics.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace lps::cli {

enum class Command { Volume, Count, Moments, Distribution, Verify, ReeveAudit, Catalog };
enum class Format { Json, Csv };
enum class Method { Exact, Mc };

struct RunConfig {
    Command command = Command::Volume;
    std::string input;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100000;
    Method method = Method::Exact;
    /// Defaults to CSV for `distribution` and JSON elsewhere.
    std::optional<Format> format;
    std::optional<std::string> outputPath;
    std::size_t cellBudget = kDefaultCellBudget;
    std::optional<std::string> identity;
    std::optional<std::int64_t> n;
    std::optional<std::size_t> shifts;
    std::optional<std::size_t> instances;
    bool dump = false;
};

using Body = std::variant<Polytope, PolytopeUnion, ZonotopeSpec>;

/// simplex:d | slab:d:k | reeve:n | central-slab:d | zonotope:<path> | file:<path>.
/// Throws InputError.
Body parsePolytopeInput(const std::string& spec);

/// Runs one command, writing the report to cfg.outputPath or `out`. Returns
/// 0 on success, 1 on a failed verification, 2 on input errors (with an
/// {"error": ...} object on `out`).
int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses command-line arguments into a RunConfig and runs it.
int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lps::cli
