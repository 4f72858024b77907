#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gatree/laurent.hpp"
#include "gatree/limit.hpp"
#include "gatree/trees.hpp"

namespace gatree {

// Everything a subcommand needs, filled from the flags before dispatch.
struct CommandConfig {
    std::string subcommand;
    std::string space = "P";
    int n = 1;
    int max_n = 7;
    std::vector<std::uint64_t> seeds = kDefaultSampleSeeds;
    int exponent_bound = kDefaultExponentBound;
    int depth = kDefaultPerturbationDepth;
    std::optional<long long> precision;  // extra truncation on limit inputs
    std::string format = "csv";          // strata: csv | json | dot
    std::string output_path;             // empty: write to the out stream
    int jobs = 1;                        // accepted for interface stability

    std::string input_path;    // limit / insert / forget
    std::string marks_text;    // limit: semicolon-separated series
    std::string chart = "additive";
    std::string stratum_text;  // degenerate
    std::string location_text; // insert: location JSON
    int mark = 0;              // forget
};

// Render a stable tree as re-parseable JSON or as a Graphviz digraph.
// Throws std::invalid_argument for an unknown format name.
std::string export_tree(const GaTree& tree, const std::string& format);

// In-process command driver; args is argv without the program name. Output
// goes to `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 1 failed consistency check, 2 usage or input error, 3 precision
// exhausted, 4 bound violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gatree
