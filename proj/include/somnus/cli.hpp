#pragma once

#include <iosfwd>
#include <string>

#include "somnus/config.hpp"

namespace somnus::cli {

// Subcommand bodies; the binary maps flags onto config keys and opens the
// output streams. All CSV/report output is byte-deterministic for a config.
int cmd_gen(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_run(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_report(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(std::ostream& out, std::int64_t max_n);
int cmd_dynamic(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace somnus::cli
