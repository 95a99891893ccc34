// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/oracle.hpp"

#include "binseq/error.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>
#include <vector>

namespace binseq {
namespace {

constexpr unsigned max_prefix_bits = 6;

struct BlockResult
{
    std::int64_t energy = std::numeric_limits<std::int64_t>::max();
    std::uint64_t count = 0;
    std::vector<std::int8_t> witness;
};

// Positions 1 .. positions-1 are free (position 0 is pinned to +1). The top
// `prefix_bits` free positions are fixed by `block`; the rest are enumerated.
BlockResult scan_block(Mode mode, std::size_t positions, unsigned prefix_bits,
                       std::uint64_t block)
{
    std::vector<std::int8_t> start(positions, 1);
    const std::size_t free_bits = positions - 1;
    const std::size_t low_bits = free_bits - prefix_bits;
    for (unsigned b = 0; b < prefix_bits; ++b)
    {
        if ((block >> b) & 1)
            start[1 + low_bits + b] = -1;
    }

    FlipEvaluator ev = mode == Mode::full ? FlipEvaluator(Sequence(std::move(start)))
                                          : FlipEvaluator(HalfSequence(std::move(start)));

    BlockResult out;
    auto visit = [&] {
        const auto e = ev.energy();
        if (e < out.energy)
        {
            out.energy = e;
            out.count = 1;
            const auto s = ev.sequence();
            out.witness.assign(s.values().begin(), s.values().end());
        }
        else if (e == out.energy)
        {
            ++out.count;
        }
    };

    visit();
    const std::uint64_t states = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < states; ++i)
    {
        ev.apply_flip(1 + static_cast<std::size_t>(std::countr_zero(i)));
        visit();
    }
    return out;
}

}  // namespace

OracleResult exhaustive(std::size_t length, Mode mode, unsigned threads)
{
    if (length == 0)
        throw InvalidInput("length must be at least 1");
    if (mode == Mode::skew && length % 2 == 0)
        throw InvalidInput("skew-symmetric sequences have odd length, got " + std::to_string(length));
    const std::size_t cap = mode == Mode::full ? oracle_max_full_length : oracle_max_skew_length;
    if (length > cap)
        throw InvalidInput("exhaustive " + std::string(to_string(mode)) + " search is capped at L = " +
                           std::to_string(cap) + " (2^" +
                           std::to_string(mode == Mode::full ? cap - 1 : (cap + 1) / 2 - 1) +
                           " states); got L = " + std::to_string(length));

    const std::size_t positions = mode == Mode::full ? length : (length + 1) / 2;
    const auto prefix_bits = static_cast<unsigned>(std::min<std::size_t>(positions - 1, max_prefix_bits));
    const std::uint64_t blocks = std::uint64_t{1} << prefix_bits;

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));

    std::vector<BlockResult> results(blocks);
    std::atomic<std::uint64_t> next{0};
    auto drain = [&] {
        for (std::uint64_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1))
            results[b] = scan_block(mode, positions, prefix_bits, b);
    };
    if (threads == 1)
    {
        drain();
    }
    else
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(drain);
    }

    std::size_t best = 0;
    std::uint64_t count = 0;
    for (std::size_t b = 0; b < results.size(); ++b)
    {
        if (results[b].energy < results[best].energy)
            best = b;
    }
    for (const auto& r : results)
    {
        if (r.energy == results[best].energy)
            count += r.count;
    }
    return OracleResult{length, mode, results[best].energy, count, Sequence(results[best].witness)};
}

}  // namespace binseq
