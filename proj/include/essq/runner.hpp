#pragma once

#include <set>
#include <string>

#include "essq/report.hpp"
#include "essq/sseq.hpp"

namespace essq {

struct Config {
    int pmax = 16;
    int qmax = 12;
    std::string format = "text";          // "text" | "json"
    std::set<std::string> only;           // empty = all groups
    std::string out_path;                 // empty = stdout
};

// known check groups, in dependency order
const std::vector<std::string>& check_groups();

// Runs the selected groups in dependency order and returns the combined
// report.  Throws std::invalid_argument for bad configurations.
Report run_checks(const Config& cfg);

// text rendering of the Einf/(u5^8,u10^8) dimension table
std::string render_einf_table(const SpectralSequence& s);

}  // namespace essq
