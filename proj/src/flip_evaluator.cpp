// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/flip_evaluator.hpp"

#include "binseq/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace binseq {

std::string_view to_string(Mode mode) noexcept
{
    return mode == Mode::full ? "full" : "skew";
}

Mode parse_mode(std::string_view text)
{
    if (text == "full")
        return Mode::full;
    if (text == "skew")
        return Mode::skew;
    throw InvalidInput("unknown mode '" + std::string(text) + "', expected full or skew");
}

FlipEvaluator::FlipEvaluator(const Sequence& s) : mode_(Mode::full)
{
    load(s);
}

FlipEvaluator::FlipEvaluator(const HalfSequence& h) : mode_(Mode::skew)
{
    load(expand(h));
}

void FlipEvaluator::load(const Sequence& s)
{
    len_ = s.size();
    fwd_.assign(2 * len_, 0);
    rev_.assign(2 * len_, 0);
    std::copy(s.values().begin(), s.values().end(), fwd_.begin());
    std::copy(s.values().rbegin(), s.values().rend(), rev_.begin());
    const auto p = autocorrelations(s);
    c_.assign(p.c.begin(), p.c.end());
    energy_ = p.energy;
    // Every lag term satisfies |dc (2 C + dc)| <= 8 (2 L + 8).
    block_ = std::max<std::size_t>(1, std::numeric_limits<std::int32_t>::max() / (8 * (2 * len_ + 8)));
}

std::size_t FlipEvaluator::num_positions() const noexcept
{
    return mode_ == Mode::full ? len_ : (len_ + 1) / 2;
}

AutocorrelationProfile FlipEvaluator::profile() const
{
    return {len_, {c_.begin(), c_.end()}, energy_};
}

Sequence FlipEvaluator::sequence() const
{
    return Sequence({fwd_.begin(), fwd_.begin() + static_cast<std::ptrdiff_t>(len_)});
}

HalfSequence FlipEvaluator::half() const
{
    if (mode_ != Mode::skew)
        throw InvalidInput("half() is only available in skew mode");
    return HalfSequence({fwd_.begin(), fwd_.begin() + static_cast<std::ptrdiff_t>(num_positions())});
}

void FlipEvaluator::check_position(std::size_t pos) const
{
    if (pos >= num_positions())
        throw InvalidInput("flip position " + std::to_string(pos) + " out of range [0, " +
                           std::to_string(num_positions()) + ")");
}

std::int64_t FlipEvaluator::delta_energy(std::size_t pos) const
{
    check_position(pos);
    return delta_unchecked(pos);
}

std::int64_t FlipEvaluator::delta_unchecked(std::size_t pos) const
{
    if (mode_ == Mode::full)
        return delta_single(pos);
    const std::size_t mirror = mirror_position(num_positions(), pos);
    return mirror == pos ? delta_single(pos) : delta_mirrored(pos, mirror);
}

// Flipping s_p changes C_k by -2 s_p (s_{p-k} + s_{p+k}), out-of-range terms
// omitted. s_{p-k} is read from the reversed copy so every access runs
// forward; the zero tails supply the omitted terms.
std::int64_t FlipEvaluator::delta_single(std::size_t p) const
{
    const std::int8_t* after = fwd_.data() + p + 1;
    const std::int8_t* before = rev_.data() + (len_ - p);
    const std::int32_t* c = c_.data();
    const std::int32_t sp = fwd_[p];
    const std::size_t lags = len_ - 1;
    std::int64_t delta = 0;
    for (std::size_t lo = 0; lo < lags; lo += block_)
    {
        const std::size_t hi = std::min(lags, lo + block_);
        std::int32_t part = 0;
        for (std::size_t i = lo; i < hi; ++i)
        {
            const std::int32_t dc = -2 * sp * (before[i] + after[i]);
            part += dc * (2 * c[i] + dc);
        }
        delta += part;
    }
    work_ += lags;
    return delta;
}

// Both endpoints of the move are skew-symmetric, so odd lags stay 0 and only
// even lags contribute. The second flip (at q) sees the first (at p) already
// applied; that only changes lag q - p, whose C_k change gains 4 s_p s_q.
std::int64_t FlipEvaluator::delta_mirrored(std::size_t p, std::size_t q) const
{
    const std::int8_t* p_after = fwd_.data() + p + 2;
    const std::int8_t* p_before = rev_.data() + (len_ + 1 - p);
    const std::int8_t* q_after = fwd_.data() + q + 2;
    const std::int8_t* q_before = rev_.data() + (len_ + 1 - q);
    const std::int32_t* c = c_.data() + 1;
    const std::int32_t sp = fwd_[p];
    const std::int32_t sq = fwd_[q];
    const std::size_t even_lags = (len_ - 1) / 2;
    std::int64_t delta = 0;
    for (std::size_t lo = 0; lo < even_lags; lo += block_)
    {
        const std::size_t hi = std::min(even_lags, lo + block_);
        std::int32_t part = 0;
        for (std::size_t j = lo; j < hi; ++j)
        {
            const std::size_t i = 2 * j;
            const std::int32_t dc = -2 * (sp * (p_before[i] + p_after[i]) + sq * (q_before[i] + q_after[i]));
            part += dc * (2 * c[i] + dc);
        }
        delta += part;
    }

    const std::size_t cross = q - p;
    const std::int64_t left_of_p = cross <= p ? fwd_[p - cross] : 0;
    const std::int64_t right_of_q = fwd_[q + cross];  // zero tail when past the end
    const std::int64_t dc = -2 * (sp * (left_of_p + sq) + sq * (sp + right_of_q));
    const std::int64_t fix = 4 * sp * sq;
    const std::int64_t c_cross = c_[cross - 1];
    delta += (dc + fix) * (2 * c_cross + dc + fix) - dc * (2 * c_cross + dc);
    work_ += even_lags;
    return delta;
}

void FlipEvaluator::flip_single(std::size_t p)
{
    const std::int8_t* after = fwd_.data() + p + 1;
    const std::int8_t* before = rev_.data() + (len_ - p);
    std::int32_t* c = c_.data();
    const std::int32_t sp = fwd_[p];
    const std::size_t lags = len_ - 1;
    for (std::size_t lo = 0; lo < lags; lo += block_)
    {
        const std::size_t hi = std::min(lags, lo + block_);
        std::int32_t part = 0;
        for (std::size_t i = lo; i < hi; ++i)
        {
            const std::int32_t dc = -2 * sp * (before[i] + after[i]);
            part += dc * (2 * c[i] + dc);
            c[i] += dc;
        }
        energy_ += part;
    }
    fwd_[p] = static_cast<std::int8_t>(-sp);
    rev_[len_ - 1 - p] = static_cast<std::int8_t>(-sp);
    work_ += lags;
}

std::int64_t FlipEvaluator::apply_flip(std::size_t pos)
{
    check_position(pos);
    flip_single(pos);
    if (mode_ == Mode::skew)
    {
        const std::size_t mirror = mirror_position(num_positions(), pos);
        if (mirror != pos)
            flip_single(mirror);
    }
    return energy_;
}

std::optional<Neighbor> FlipEvaluator::best_neighbor(std::span<const std::size_t> excluded) const
{
    std::vector<bool> blocked(num_positions(), false);
    for (auto pos : excluded)
    {
        check_position(pos);
        blocked[pos] = true;
    }
    return best_neighbor_if([&](std::size_t pos) { return !blocked[pos]; });
}

}  // namespace binseq
