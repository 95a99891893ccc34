// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/skew.hpp"

#include "binseq/error.hpp"

namespace binseq {

HalfSequence::HalfSequence(std::vector<std::int8_t> values) : values_(std::move(values))
{
    if (values_.empty())
        throw InvalidInput("half sequence must have at least one entry");
    for (auto v : values_)
    {
        if (v != 1 && v != -1)
            throw InvalidInput("half sequence entries must be +1 or -1");
    }
}

HalfSequence HalfSequence::parse(std::string_view signs)
{
    const auto s = Sequence::parse(signs);
    return HalfSequence({s.values().begin(), s.values().end()});
}

Sequence expand(const HalfSequence& h)
{
    const std::size_t n = h.size();
    std::vector<std::int8_t> full(h.full_length());
    for (std::size_t p = 0; p < n; ++p)
    {
        full[p] = static_cast<std::int8_t>(h[p]);
        full[mirror_position(n, p)] = static_cast<std::int8_t>(mirror_sign(n, p) * h[p]);
    }
    return Sequence(std::move(full));
}

bool is_skew_symmetric(const Sequence& s)
{
    if (s.size() % 2 == 0)
        return false;
    const std::size_t n = (s.size() + 1) / 2;
    for (std::size_t p = 0; p + 1 < n; ++p)
    {
        if (s[mirror_position(n, p)] != mirror_sign(n, p) * s[p])
            return false;
    }
    return true;
}

HalfSequence contract(const Sequence& s)
{
    if (!is_skew_symmetric(s))
        throw InvalidInput("sequence is not skew-symmetric");
    const std::size_t n = (s.size() + 1) / 2;
    return HalfSequence({s.values().begin(), s.values().begin() + static_cast<std::ptrdiff_t>(n)});
}

}  // namespace binseq
