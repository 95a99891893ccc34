// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/sequence.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace binseq {

/// A sequence in hexadecimal notation together with its declared length.
///
/// Each hex digit expands to four bits, most significant first. The leading
/// `4 * digits - length` bits are padding and must be zero; the remaining
/// bits map 0 -> +1 and 1 -> -1.
struct HexRecord
{
    std::string hex;
    std::size_t length = 0;

    friend bool operator==(const HexRecord&, const HexRecord&) = default;
};

/// Throws InvalidInput on a non-hex character (whitespace is skipped), when
/// the length exceeds the available bits, or when a padding bit is set.
[[nodiscard]] Sequence decode(std::string_view hex, std::size_t length);
[[nodiscard]] Sequence decode(const HexRecord& record);

/// Minimal zero padding, uppercase, no whitespace.
[[nodiscard]] HexRecord encode(const Sequence& s);

/// Uppercase with all whitespace removed; throws InvalidInput on non-hex.
[[nodiscard]] std::string canonical_hex(std::string_view hex);

}  // namespace binseq
