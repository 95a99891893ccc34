// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "binseq/sequence.hpp"
#include "binseq/skew.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace binseq {

enum class Mode
{
    full,  ///< all 2^L sequences; a move flips one entry
    skew,  ///< skew-symmetric sequences; a move flips one half entry and its mirror
};

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
/// Accepts "full" and "skew"; throws InvalidInput otherwise.
[[nodiscard]] Mode parse_mode(std::string_view text);

struct Neighbor
{
    std::size_t pos = 0;
    std::int64_t delta = 0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Maintains the autocorrelation profile of a sequence under single-position
/// flips at O(L) cost per flip.
///
/// In full mode positions address the L entries directly. In skew mode they
/// address the n = (L+1)/2 half entries; flipping half position p flips full
/// positions p and 2n-2-p (a single entry for the centre p = n-1), keeping the
/// sequence skew-symmetric. The full sequence is stored in both modes.
///
/// Not safe for concurrent use. delta_energy() and best_neighbor() do not
/// change the observable state but do bump the work counter.
class FlipEvaluator
{
public:
    explicit FlipEvaluator(const Sequence& s);
    explicit FlipEvaluator(const HalfSequence& h);

    [[nodiscard]] Mode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t length() const noexcept { return len_; }
    /// L in full mode, n in skew mode.
    [[nodiscard]] std::size_t num_positions() const noexcept;

    [[nodiscard]] std::int64_t energy() const noexcept { return energy_; }
    /// C_1 .. C_{L-1}.
    [[nodiscard]] std::span<const std::int32_t> correlations() const noexcept { return c_; }
    [[nodiscard]] AutocorrelationProfile profile() const;
    [[nodiscard]] Sequence sequence() const;
    /// Throws InvalidInput in full mode.
    [[nodiscard]] HalfSequence half() const;

    /// E after flipping `pos` minus E now. Throws InvalidInput when out of range.
    [[nodiscard]] std::int64_t delta_energy(std::size_t pos) const;

    /// Flips `pos` and returns the new energy. Throws InvalidInput when out of range.
    std::int64_t apply_flip(std::size_t pos);

    /// Position with the lowest delta among those not in `excluded`, lowest
    /// index on ties. Empty when every position is excluded.
    [[nodiscard]] std::optional<Neighbor> best_neighbor(std::span<const std::size_t> excluded = {}) const;

    /// Same, restricted to positions for which `allowed(pos)` is true.
    template <class Allowed>
    [[nodiscard]] std::optional<Neighbor> best_neighbor_if(Allowed&& allowed) const
    {
        std::optional<Neighbor> best;
        const std::size_t count = num_positions();
        for (std::size_t pos = 0; pos < count; ++pos)
        {
            if (!allowed(pos))
                continue;
            const auto d = delta_unchecked(pos);
            if (!best || d < best->delta)
                best = Neighbor{pos, d};
        }
        return best;
    }

    /// Number of lag updates performed so far, including delta evaluations.
    [[nodiscard]] std::uint64_t work() const noexcept { return work_; }

private:
    void load(const Sequence& s);
    void check_position(std::size_t pos) const;
    std::int64_t delta_unchecked(std::size_t pos) const;
    std::int64_t delta_single(std::size_t pos) const;
    std::int64_t delta_mirrored(std::size_t pos, std::size_t mirror) const;
    void flip_single(std::size_t pos);

    Mode mode_;
    std::size_t len_ = 0;
    /// s_0 .. s_{L-1} then L zeros.
    std::vector<std::int8_t> fwd_;
    /// s_{L-1} .. s_0 then L zeros.
    std::vector<std::int8_t> rev_;
    std::vector<std::int32_t> c_;
    /// Lags summed in int32 before widening; chosen so no block overflows.
    std::size_t block_ = 1;
    std::int64_t energy_ = 0;
    mutable std::uint64_t work_ = 0;
};

}  // namespace binseq
