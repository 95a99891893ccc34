// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/fingerprint.hpp"

#include "binseq/error.hpp"

namespace binseq {

std::uint64_t fingerprint(const Sequence& s)
{
    std::uint64_t fp = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        if (s[i] < 0)
            fp ^= position_key(i);
    }
    return fp;
}

VisitedSet::VisitedSet(std::size_t capacity) : capacity_(capacity)
{
    if (capacity_ == 0)
        throw InvalidInput("visited-set capacity must be positive");
}

void VisitedSet::insert(std::uint64_t fp)
{
    if (!set_.insert(fp).second)
        return;
    order_.push_back(fp);
    if (order_.size() > capacity_)
    {
        set_.erase(order_.front());
        order_.pop_front();
    }
}

void VisitedSet::clear()
{
    set_.clear();
    order_.clear();
}

}  // namespace binseq
