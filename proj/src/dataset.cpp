// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/dataset.hpp"

#include "binseq/codec.hpp"
#include "binseq/error.hpp"
#include "binseq/skew.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace binseq {

double RecordEntry::published_merit_value() const
{
    std::size_t used = 0;
    double value = 0.0;
    try
    {
        value = std::stod(published_merit, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != published_merit.size())
        throw InvalidInput("malformed merit factor '" + published_merit + "'");
    return value;
}

std::vector<RecordEntry> parse_records(std::string_view text)
{
    std::vector<RecordEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no)
    {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;

        std::istringstream fields(line);
        std::string length_text;
        RecordEntry entry;
        std::string extra;
        if (!(fields >> length_text >> entry.published_merit >> entry.hex) || (fields >> extra))
            throw InvalidInput("line " + std::to_string(line_no) + ": expected three columns L F HEX");

        std::size_t used = 0;
        try
        {
            entry.length = std::stoul(length_text, &used);
        }
        catch (const std::exception&)
        {
            used = 0;
        }
        if (used == 0 || used != length_text.size() || entry.length == 0)
            throw InvalidInput("line " + std::to_string(line_no) + ": bad length '" + length_text + "'");
        try
        {
            (void)entry.published_merit_value();
        }
        catch (const InvalidInput& e)
        {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<RecordEntry> load_records(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open dataset '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_records(buffer.str());
}

std::vector<RecordEntry> bundled_records()
{
    return parse_records(bundled_table_text());
}

RecordCheck check_record(const RecordEntry& entry)
{
    RecordCheck check;
    check.entry = entry;
    const double published = entry.published_merit_value();
    const double len = static_cast<double>(entry.length);
    check.expected_energy = std::llround(len * len / (2.0 * published));

    std::optional<Sequence> s;
    try
    {
        s = decode(entry.hex, entry.length);
    }
    catch (const InvalidInput& e)
    {
        check.error = e.what();
        return check;
    }
    check.decoded = true;
    check.skew_symmetric = is_skew_symmetric(*s);
    check.energy = energy(*s);
    check.merit = merit_factor(entry.length, check.energy).value_or(INFINITY);
    check.merit_matches = std::abs(check.merit - published) <= merit_tolerance;
    check.energy_matches = check.energy == check.expected_energy;
    check.parity_matches = entry.length % 2 == 1 &&
                           check.energy % 2 == static_cast<std::int64_t>((entry.length - 1) / 2 % 2);
    return check;
}

}  // namespace binseq
