// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/flip_evaluator.hpp"
#include "binseq/sequence.hpp"

#include <cstddef>
#include <cstdint>

namespace binseq {

/// Largest lengths exhaustive() accepts.
inline constexpr std::size_t oracle_max_full_length = 28;
inline constexpr std::size_t oracle_max_skew_length = 41;

struct OracleResult
{
    std::size_t length = 0;
    Mode mode = Mode::full;
    std::int64_t optimal_energy = 0;
    /// Optima counted up to negation: only sequences with s_1 = +1 are scanned.
    std::uint64_t optimum_count = 0;
    /// First optimum in enumeration order.
    Sequence witness;
};

/// Exhaustive minimum-energy search over every sequence of the given length
/// (full mode) or every skew-symmetric one (skew mode).
///
/// The scan fixes s_1 = +1 (negation leaves the energy unchanged) and walks
/// the remaining entries in Gray-code order through a FlipEvaluator, one flip
/// per visited state. Work is split into prefix blocks run on up to
/// `threads` threads (0 = hardware concurrency); the merge is in block order,
/// so the result does not depend on scheduling.
///
/// Throws InvalidInput for length 0, an even length in skew mode, or a length
/// above the mode's cap.
[[nodiscard]] OracleResult exhaustive(std::size_t length, Mode mode, unsigned threads = 0);

}  // namespace binseq
