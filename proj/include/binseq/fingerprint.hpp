// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_set>

namespace binseq {

/// SplitMix64 step: advances `x` by the golden-ratio increment and returns the
/// mixed output. Used for seed derivation and position keys.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Zobrist key of full-sequence position `pos`: splitmix64(pos).
[[nodiscard]] constexpr std::uint64_t position_key(std::size_t pos) noexcept
{
    return splitmix64(static_cast<std::uint64_t>(pos));
}

/// XOR of position_key(i) over every i with s_i = -1. Flipping a position
/// toggles its key, so fingerprints update in O(1) per flipped entry.
[[nodiscard]] std::uint64_t fingerprint(const Sequence& s);

/// Bounded set of fingerprints with first-in-first-out eviction.
class VisitedSet
{
public:
    /// Throws InvalidInput when capacity is 0.
    explicit VisitedSet(std::size_t capacity);

    [[nodiscard]] bool contains(std::uint64_t fp) const { return set_.contains(fp); }
    /// No-op when already present; evicts the oldest entry when full.
    void insert(std::uint64_t fp);
    void clear();

    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

private:
    std::size_t capacity_;
    std::unordered_set<std::uint64_t> set_;
    std::deque<std::uint64_t> order_;
};

}  // namespace binseq
