#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qgx::cli {

struct GaOverrides {
    std::optional<std::string> mode;
    std::optional<std::uint64_t> seed;
};

/// Loads the JSON config at `config_path`, runs the GA and writes the
/// per-generation CSV to `out_path`.
void run_ga_command(const std::string& config_path, const std::string& out_path, const GaOverrides& overrides,
                    std::ostream& out);

} // namespace qgx::cli
