#ifndef TACHYON_CLI_HPP
#define TACHYON_CLI_HPP

#include <map>
#include <string>

namespace tachyon::cli {

inline constexpr const char* kToolkitVersion = "tachyon-toolkit 1.0.0";

/// One resolved invocation. `params` is echoed verbatim into every output
/// header so a dataset identifies the configuration that produced it.
struct RunConfig {
    std::string command;  // commutators|boost-check|pole-scan|figure2|wavepacket|norms|all
    std::map<std::string, std::string> params;
    std::string output_path;       // file; directory for `all`
    std::string format = "json";   // json|csv
};

/// Executes a command, writing its artifact files.
/// Exit contract: 0 = every enabled assertion passed; 1 = a claim check
/// failed or a numeric evaluation did not converge; 2 = configuration error.
int run(const RunConfig& config);

}  // namespace tachyon::cli

#endif
