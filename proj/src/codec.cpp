// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/codec.hpp"

#include "binseq/error.hpp"

#include <cctype>
#include <vector>

namespace binseq {
namespace {

int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string canonical_hex(std::string_view hex)
{
    std::string out;
    out.reserve(hex.size());
    for (char c : hex)
    {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (hex_value(c) < 0)
            throw InvalidInput(std::string("invalid hex character '") + c + "'");
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

Sequence decode(std::string_view hex, std::size_t length)
{
    if (length == 0)
        throw InvalidInput("declared length must be at least 1");
    const std::string digits = canonical_hex(hex);
    const std::size_t bits = 4 * digits.size();
    if (length > bits)
        throw InvalidInput("declared length " + std::to_string(length) + " exceeds the " +
                           std::to_string(bits) + " bits encoded");

    const std::size_t padding = bits - length;
    std::vector<std::int8_t> values;
    values.reserve(length);
    std::size_t bit_index = 0;
    for (char c : digits)
    {
        const int nibble = hex_value(c);
        for (int shift = 3; shift >= 0; --shift, ++bit_index)
        {
            const bool one = (nibble >> shift) & 1;
            if (bit_index < padding)
            {
                if (one)
                    throw InvalidInput("padding bit " + std::to_string(bit_index) +
                                       " is set; hex encodes more than " +
                                       std::to_string(length) + " entries");
                continue;
            }
            values.push_back(one ? -1 : 1);
        }
    }
    return Sequence(std::move(values));
}

Sequence decode(const HexRecord& record)
{
    return decode(record.hex, record.length);
}

HexRecord encode(const Sequence& s)
{
    static constexpr char digits[] = "0123456789ABCDEF";
    const std::size_t len = s.size();
    const std::size_t padding = (4 - len % 4) % 4;
    HexRecord out;
    out.length = len;
    out.hex.reserve((len + padding) / 4);
    int nibble = 0;
    for (std::size_t i = 0; i < padding + len; ++i)
    {
        const bool one = i >= padding && s[i - padding] < 0;
        nibble = (nibble << 1) | (one ? 1 : 0);
        if (i % 4 == 3)
        {
            out.hex.push_back(digits[nibble]);
            nibble = 0;
        }
    }
    return out;
}

}  // namespace binseq
