// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace binseq {

/// One published record: length, merit factor as printed, hex sequence.
struct RecordEntry
{
    std::size_t length = 0;
    std::string published_merit;
    std::string hex;

    [[nodiscard]] double published_merit_value() const;
};

/// Parses the three-column text format `L F HEX`, one record per line.
/// Blank lines and lines starting with '#' are ignored. Throws InvalidInput
/// naming the offending line.
[[nodiscard]] std::vector<RecordEntry> parse_records(std::string_view text);
[[nodiscard]] std::vector<RecordEntry> load_records(const std::filesystem::path& path);

/// The 51 skew-symmetric record sequences of odd length 301..401, compiled in.
[[nodiscard]] std::string_view bundled_table_text() noexcept;
[[nodiscard]] std::vector<RecordEntry> bundled_records();

/// Half a unit in the fourth decimal.
inline constexpr double merit_tolerance = 5e-5;

struct RecordCheck
{
    RecordEntry entry;
    bool decoded = false;
    /// Decoder message when decoding failed.
    std::string error;
    bool skew_symmetric = false;
    std::int64_t energy = 0;
    /// round(L^2 / (2 F_published)).
    std::int64_t expected_energy = 0;
    double merit = 0.0;
    bool merit_matches = false;
    bool energy_matches = false;
    /// E = (L-1)/2 (mod 2), forced for skew-symmetric sequences.
    bool parity_matches = false;

    [[nodiscard]] bool passed() const noexcept
    {
        return decoded && skew_symmetric && merit_matches && energy_matches && parity_matches;
    }
};

[[nodiscard]] RecordCheck check_record(const RecordEntry& entry);

}  // namespace binseq
