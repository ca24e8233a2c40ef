#ifndef KAUCTION_CONFIG_HPP_
#define KAUCTION_CONFIG_HPP_

#include <filesystem>

#include "kauction/harness.hpp"

namespace kauction {

// Everything a run needs, as read from a config document.
struct RunSpec {
  AuctionConfig config;
  BidPlan bids;
  AdversaryScript script;
};

// Throws ConfigError on unknown keys, wrong types, or values that do not
// form a valid auction. Relative params-file paths resolve against
// `base_dir`.
RunSpec parse_run_config(const Json& doc, const std::filesystem::path& base_dir = ".");
// Reads and parses a config file; ConfigError also covers I/O failures.
RunSpec load_run_config(const std::filesystem::path& path);

// The worked example: toy group, fixed codes, randomizers and shares,
// bids 30/10/40/80, second-price rule.
Json golden_config();

Json params_to_json(const GroupParams& params);
// Throws ConfigError on missing fields, and ParameterError when the values
// fail validation.
GroupParams params_from_json(const Json& doc);

}  // namespace kauction

#endif  // KAUCTION_CONFIG_HPP_
