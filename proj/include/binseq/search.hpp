// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/flip_evaluator.hpp"
#include "binseq/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace binseq {

struct SearchConfig
{
    std::size_t length = 0;
    Mode mode = Mode::skew;
    std::uint64_t seed = 0;
    /// Stop as soon as a sequence with energy <= target is found.
    std::optional<std::int64_t> target_energy;
    /// Total flip budget of one worker, shared by all of its restarts.
    std::uint64_t max_flips = 100'000'000;
    /// A walk restarts after max_flips / max_restarts flips without improving
    /// its own best, or when every neighbour has been visited. At most
    /// max_restarts restarts are performed.
    std::uint64_t max_restarts = 1'000;
    /// Seconds; unlimited when empty.
    std::optional<double> wall_time_limit;
    unsigned workers = 1;
    /// Fingerprints retained per walk before FIFO eviction.
    std::size_t memory_capacity = std::size_t{1} << 20;
};

/// Throws InvalidInput describing the first violated constraint.
void validate(const SearchConfig& cfg);

enum class StopReason
{
    target_reached,
    lower_bound,  ///< parity lower bound floor(L/2) reached; nothing better exists
    flip_budget,
    restart_budget,
    wall_time,
    peer_target,  ///< another worker reached the target
};

[[nodiscard]] std::string_view to_string(StopReason reason) noexcept;

/// Name of the pseudo-random generator driving every walk.
inline constexpr std::string_view search_rng_name = "mt19937_64";

struct SearchResult
{
    Sequence best;
    std::int64_t best_energy = 0;
    /// Empty for zero energy.
    std::optional<double> merit_factor;
    std::uint64_t flips = 0;
    std::uint64_t restarts = 0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    Mode mode = Mode::full;
    bool target_reached = false;
    StopReason stop_reason = StopReason::flip_budget;
    /// Worker whose walk produced `best`.
    unsigned worker = 0;
};

/// Trace hook for instrumented runs.
struct WalkEvent
{
    enum class Kind
    {
        start,  ///< a fresh random state at the beginning of a walk
        move,   ///< an accepted flip
    };
    Kind kind = Kind::start;
    /// Number of restarts performed before this walk.
    std::uint64_t walk = 0;
    std::uint64_t fingerprint = 0;
    std::int64_t energy = 0;
};

using SearchObserver = std::function<void(const WalkEvent&)>;

/// Stream seed of worker `index`: splitmix64(seed + index).
[[nodiscard]] std::uint64_t worker_stream_seed(std::uint64_t seed, unsigned index) noexcept;

/// Self-avoiding steepest-descent walk with random restarts, run as worker
/// `index` of the configuration (cfg.workers is ignored). Deterministic for
/// a fixed (cfg, index) unless the wall-time limit triggers.
[[nodiscard]] SearchResult run_search_worker(const SearchConfig& cfg, unsigned index,
                                             const SearchObserver& observer = {});

/// Worker 0 of `cfg`.
[[nodiscard]] SearchResult run_search(const SearchConfig& cfg, const SearchObserver& observer = {});

/// Runs cfg.workers independent workers on separate threads and returns the
/// lowest-energy result (lowest worker index on ties). Flip and restart counts
/// are summed over workers. When a target energy is set, workers stop once any
/// of them reaches it.
[[nodiscard]] SearchResult run_parallel(const SearchConfig& cfg);

}  // namespace binseq
