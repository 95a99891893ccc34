// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/search.hpp"

#include "binseq/error.hpp"
#include "binseq/fingerprint.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace binseq {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t check_interval = 256;

struct SharedState
{
    std::atomic<bool> target_hit{false};
};

std::vector<std::int8_t> random_signs(std::mt19937_64& rng, std::size_t count)
{
    std::vector<std::int8_t> out(count);
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < count; ++i)
    {
        if (i % 64 == 0)
            bits = rng();
        out[i] = (bits & 1) ? -1 : 1;
        bits >>= 1;
    }
    return out;
}

FlipEvaluator random_state(std::mt19937_64& rng, const SearchConfig& cfg)
{
    if (cfg.mode == Mode::full)
        return FlipEvaluator(Sequence(random_signs(rng, cfg.length)));
    return FlipEvaluator(HalfSequence(random_signs(rng, (cfg.length + 1) / 2)));
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Worker
{
public:
    Worker(const SearchConfig& cfg, unsigned index, SharedState* shared, const SearchObserver& observer)
        : cfg_(cfg), index_(index), shared_(shared), observer_(observer),
          rng_(worker_stream_seed(cfg.seed, index)), visited_(cfg.memory_capacity)
    {
        const std::size_t positions = cfg.mode == Mode::full ? cfg.length : (cfg.length + 1) / 2;
        keys_.resize(positions);
        for (std::size_t p = 0; p < positions; ++p)
        {
            keys_[p] = position_key(p);
            if (cfg.mode == Mode::skew)
            {
                const std::size_t m = mirror_position(positions, p);
                if (m != p)
                    keys_[p] ^= position_key(m);
            }
        }
        stagnation_limit_ = std::max<std::uint64_t>(1, cfg.max_flips / cfg.max_restarts);
    }

    SearchResult run()
    {
        start_ = Clock::now();
        for (std::uint64_t walk = 0;; ++walk)
        {
            restarts_ = walk;
            walk_once(walk);
            if (stop_)
                break;
            if (flips_ >= cfg_.max_flips)
            {
                stop_ = StopReason::flip_budget;
                break;
            }
            if (walk == cfg_.max_restarts)
            {
                stop_ = StopReason::restart_budget;
                break;
            }
        }
        return finish();
    }

private:
    void walk_once(std::uint64_t walk)
    {
        FlipEvaluator ev = random_state(rng_, cfg_);
        std::uint64_t fp = fingerprint(ev.sequence());
        visited_.clear();
        visited_.insert(fp);
        notify(WalkEvent::Kind::start, walk, fp, ev.energy());
        record(ev);
        if (stop_)
            return;

        std::int64_t walk_best = ev.energy();
        std::uint64_t since_improvement = 0;
        while (flips_ < cfg_.max_flips)
        {
            if (flips_ % check_interval == 0 && should_interrupt())
                return;

            const auto move = ev.best_neighbor_if(
                [&](std::size_t pos) { return !visited_.contains(fp ^ keys_[pos]); });
            if (!move)
                return;  // every neighbour visited

            ev.apply_flip(move->pos);
            fp ^= keys_[move->pos];
            visited_.insert(fp);
            ++flips_;
            notify(WalkEvent::Kind::move, walk, fp, ev.energy());

            if (ev.energy() < walk_best)
            {
                walk_best = ev.energy();
                since_improvement = 0;
                record(ev);
                if (stop_)
                    return;
            }
            else if (++since_improvement >= stagnation_limit_)
            {
                return;
            }
        }
    }

    void record(const FlipEvaluator& ev)
    {
        if (ev.energy() >= best_energy_)
            return;
        best_energy_ = ev.energy();
        best_ = ev.sequence();
        if (cfg_.target_energy && best_energy_ <= *cfg_.target_energy)
        {
            stop_ = StopReason::target_reached;
            if (shared_)
                shared_->target_hit.store(true, std::memory_order_relaxed);
        }
        else if (best_energy_ <= parity_energy_bound(cfg_.length))
        {
            stop_ = StopReason::lower_bound;
        }
    }

    bool should_interrupt()
    {
        if (shared_ && shared_->target_hit.load(std::memory_order_relaxed))
        {
            stop_ = StopReason::peer_target;
            return true;
        }
        if (cfg_.wall_time_limit && seconds_since(start_) >= *cfg_.wall_time_limit)
        {
            stop_ = StopReason::wall_time;
            return true;
        }
        return false;
    }

    void notify(WalkEvent::Kind kind, std::uint64_t walk, std::uint64_t fp, std::int64_t energy) const
    {
        if (observer_)
            observer_(WalkEvent{kind, walk, fp, energy});
    }

    SearchResult finish() const
    {
        return SearchResult{
            .best = *best_,
            .best_energy = best_energy_,
            .merit_factor = merit_factor(cfg_.length, best_energy_),
            .flips = flips_,
            .restarts = restarts_,
            .wall_time_s = seconds_since(start_),
            .seed = cfg_.seed,
            .mode = cfg_.mode,
            .target_reached = cfg_.target_energy && best_energy_ <= *cfg_.target_energy,
            .stop_reason = *stop_,
            .worker = index_,
        };
    }

    const SearchConfig& cfg_;
    unsigned index_;
    SharedState* shared_;
    const SearchObserver& observer_;
    std::mt19937_64 rng_;
    VisitedSet visited_;
    std::vector<std::uint64_t> keys_;
    std::uint64_t stagnation_limit_ = 1;

    Clock::time_point start_;
    std::uint64_t flips_ = 0;
    std::uint64_t restarts_ = 0;
    std::int64_t best_energy_ = std::numeric_limits<std::int64_t>::max();
    std::optional<Sequence> best_;
    std::optional<StopReason> stop_;
};

SearchResult run_worker(const SearchConfig& cfg, unsigned index, SharedState* shared,
                        const SearchObserver& observer)
{
    return Worker(cfg, index, shared, observer).run();
}

}  // namespace

void validate(const SearchConfig& cfg)
{
    if (cfg.length == 0)
        throw InvalidInput("length must be at least 1");
    if (cfg.mode == Mode::skew && cfg.length % 2 == 0)
        throw InvalidInput("skew mode requires an odd length, got " + std::to_string(cfg.length));
    if (cfg.max_flips == 0)
        throw InvalidInput("max_flips must be positive");
    if (cfg.max_restarts == 0)
        throw InvalidInput("max_restarts must be positive");
    if (cfg.workers == 0)
        throw InvalidInput("workers must be positive");
    if (cfg.memory_capacity == 0)
        throw InvalidInput("memory_capacity must be positive");
    if (cfg.wall_time_limit && !(*cfg.wall_time_limit > 0.0))
        throw InvalidInput("wall_time_limit must be positive");
}

std::string_view to_string(StopReason reason) noexcept
{
    switch (reason)
    {
    case StopReason::target_reached:
        return "target_reached";
    case StopReason::lower_bound:
        return "lower_bound";
    case StopReason::flip_budget:
        return "flip_budget";
    case StopReason::restart_budget:
        return "restart_budget";
    case StopReason::wall_time:
        return "wall_time";
    case StopReason::peer_target:
        return "peer_target";
    }
    return "unknown";
}

std::uint64_t worker_stream_seed(std::uint64_t seed, unsigned index) noexcept
{
    return splitmix64(seed + index);
}

SearchResult run_search_worker(const SearchConfig& cfg, unsigned index, const SearchObserver& observer)
{
    validate(cfg);
    return run_worker(cfg, index, nullptr, observer);
}

SearchResult run_search(const SearchConfig& cfg, const SearchObserver& observer)
{
    return run_search_worker(cfg, 0, observer);
}

SearchResult run_parallel(const SearchConfig& cfg)
{
    validate(cfg);
    if (cfg.workers == 1)
        return run_worker(cfg, 0, nullptr, {});

    const auto start = Clock::now();
    SharedState shared;
    SharedState* shared_ptr = cfg.target_energy ? &shared : nullptr;
    std::vector<std::optional<SearchResult>> results(cfg.workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(cfg.workers);
        for (unsigned i = 0; i < cfg.workers; ++i)
        {
            threads.emplace_back([&, i] { results[i] = run_worker(cfg, i, shared_ptr, {}); });
        }
    }

    std::size_t best = 0;
    std::uint64_t flips = 0;
    std::uint64_t restarts = 0;
    for (std::size_t i = 0; i < results.size(); ++i)
    {
        flips += results[i]->flips;
        restarts += results[i]->restarts;
        if (results[i]->best_energy < results[best]->best_energy)
            best = i;
    }
    SearchResult out = *results[best];
    out.flips = flips;
    out.restarts = restarts;
    out.wall_time_s = seconds_since(start);
    return out;
}

}  // namespace binseq
