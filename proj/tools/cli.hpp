// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/search.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace binseq::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_internal = 3,
};

/// Runs one command line (without the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The persisted record of one search run. Wall-clock fields live under
/// "timing"; everything else is a function of the configuration.
[[nodiscard]] nlohmann::json make_result_record(const SearchConfig& cfg, const SearchResult& result,
                                                const std::string& timestamp);

/// Drops the "timing" object, leaving the reproducible part of a record.
[[nodiscard]] nlohmann::json without_timing(nlohmann::json record);

}  // namespace binseq::cli
