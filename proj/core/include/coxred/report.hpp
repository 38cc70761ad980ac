#pragma once

#include <string>

#include <json.hpp>

#include "coxred/pipeline.hpp"

namespace coxred {

using Json = nlohmann::ordered_json;

// Sections accumulate in pipeline order; every subcommand emits a prefix of
// the same document so reports stay schema-stable and byte-deterministic.
struct ReportSections {
    bool lattice = false;
    bool prime = false;
    bool torsion = false;
    bool invariants = false;
    bool homology = false;
};

Json build_report(const Pipeline& p, const ReportSections& sections);

// machine-readable error object for the CLI
Json error_object(const std::string& kind, const std::string& message);

std::string render_report(const Json& report);  // fixed 2-space indent + newline

} // namespace coxred
