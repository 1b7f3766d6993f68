#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polychrome/zn_core.hpp"

namespace polychrome::cli {

enum ExitCode : int {
    kOk = 0,
    kSemanticFailure = 1, // violation, disagreement, or no witness
    kUsage = 2,
    kInternalDefect = 3,
    kIoFailure = 4,
};

// One classification / witness / oracle run, as printed by --format json.
struct RunReport {
    Residue n = 0;
    std::vector<Residue> set;
    int p = 0;
    std::string case_tag;
    std::string method; // "closed_form" or "oracle"
    std::optional<std::string> witness;
    std::string transform;
    double timing_ms = 0.0;
};

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

// Runs one subcommand. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polychrome::cli
