// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binseq {

/// The first n entries of a skew-symmetric sequence of length L = 2n - 1.
///
/// A skew-symmetric sequence satisfies s_{n+i} = (-1)^i s_{n-i} for
/// i = 1 .. n-1, so it is fully determined by its first half. Every odd-lag
/// autocorrelation of such a sequence vanishes.
class HalfSequence
{
public:
    /// Throws InvalidInput when empty or when an entry is not +1 / -1.
    explicit HalfSequence(std::vector<std::int8_t> values);

    static HalfSequence parse(std::string_view signs);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::size_t full_length() const noexcept { return 2 * values_.size() - 1; }
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }

    friend bool operator==(const HalfSequence&, const HalfSequence&) = default;

private:
    std::vector<std::int8_t> values_;
};

/// Full-sequence position (0-based) mirrored to half position `pos` of a
/// half sequence with `half_size` entries. Equal to `pos` for the centre.
[[nodiscard]] constexpr std::size_t mirror_position(std::size_t half_size, std::size_t pos) noexcept
{
    return 2 * half_size - 2 - pos;
}

/// Sign relating the mirrored entry to the half entry: s[mirror] = sign * s[pos].
[[nodiscard]] constexpr int mirror_sign(std::size_t half_size, std::size_t pos) noexcept
{
    return ((half_size - 1 - pos) % 2 == 0) ? 1 : -1;
}

[[nodiscard]] Sequence expand(const HalfSequence& h);

/// True iff the length is odd and the skew-symmetry relation holds.
[[nodiscard]] bool is_skew_symmetric(const Sequence& s);

/// First n entries; throws InvalidInput unless is_skew_symmetric(s).
[[nodiscard]] HalfSequence contract(const Sequence& s);

}  // namespace binseq
