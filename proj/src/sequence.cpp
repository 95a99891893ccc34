// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#include "binseq/sequence.hpp"

#include "binseq/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace binseq {

Sequence::Sequence(std::vector<std::int8_t> values) : values_(std::move(values))
{
    if (values_.empty())
        throw InvalidInput("sequence must have at least one entry");
    for (auto v : values_)
    {
        if (v != 1 && v != -1)
            throw InvalidInput("sequence entries must be +1 or -1, got " + std::to_string(v));
    }
}

Sequence Sequence::parse(std::string_view signs)
{
    std::vector<std::int8_t> values;
    values.reserve(signs.size());
    for (char c : signs)
    {
        if (c == '+')
            values.push_back(1);
        else if (c == '-')
            values.push_back(-1);
        else
            throw InvalidInput(std::string("unexpected character in sign string: '") + c + "'");
    }
    return Sequence(std::move(values));
}

Sequence Sequence::ones(std::size_t length)
{
    return Sequence(std::vector<std::int8_t>(length, 1));
}

Sequence Sequence::negated() const
{
    auto v = values_;
    for (auto& x : v)
        x = static_cast<std::int8_t>(-x);
    return Sequence(std::move(v));
}

Sequence Sequence::reversed() const
{
    return Sequence({values_.rbegin(), values_.rend()});
}

Sequence Sequence::alternated() const
{
    auto v = values_;
    // 1-based odd positions are 0-based even positions; (-1)^i = -1 there.
    for (std::size_t i = 0; i < v.size(); i += 2)
        v[i] = static_cast<std::int8_t>(-v[i]);
    return Sequence(std::move(v));
}

Sequence Sequence::flipped(std::size_t pos) const
{
    if (pos >= values_.size())
        throw InvalidInput("flip position out of range");
    auto v = values_;
    v[pos] = static_cast<std::int8_t>(-v[pos]);
    return Sequence(std::move(v));
}

std::string Sequence::to_string() const
{
    std::string out;
    out.reserve(values_.size());
    for (auto v : values_)
        out.push_back(v > 0 ? '+' : '-');
    return out;
}

AutocorrelationProfile autocorrelations(const Sequence& s)
{
    const std::size_t len = s.size();
    const auto v = s.values();
    AutocorrelationProfile profile;
    profile.length = len;
    profile.c.resize(len - 1);
    for (std::size_t k = 1; k < len; ++k)
    {
        std::int64_t ck = 0;
        for (std::size_t i = 0; i + k < len; ++i)
            ck += v[i] * v[i + k];
        profile.c[k - 1] = ck;
        profile.energy += ck * ck;
    }
    return profile;
}

std::int64_t energy(const Sequence& s)
{
    return autocorrelations(s).energy;
}

std::optional<double> merit_factor(std::size_t length, std::int64_t energy)
{
    if (energy == 0)
        return std::nullopt;
    const auto l = static_cast<double>(length);
    return l * l / (2.0 * static_cast<double>(energy));
}

std::optional<double> merit_factor(const Sequence& s)
{
    return merit_factor(s.size(), energy(s));
}

std::int64_t psl(const Sequence& s)
{
    if (s.size() < 2)
        throw InvalidInput("PSL requires length >= 2");
    const auto profile = autocorrelations(s);
    std::int64_t peak = 0;
    for (auto ck : profile.c)
        peak = std::max(peak, ck < 0 ? -ck : ck);
    return peak;
}

MeritReport evaluate(const Sequence& s)
{
    const auto profile = autocorrelations(s);
    MeritReport report;
    report.length = s.size();
    report.energy = profile.energy;
    report.merit_factor = merit_factor(s.size(), profile.energy);
    if (s.size() >= 2)
    {
        std::int64_t peak = 0;
        for (auto ck : profile.c)
            peak = std::max(peak, ck < 0 ? -ck : ck);
        report.psl = peak;
    }
    return report;
}

double round_merit(double f)
{
    return std::floor(f * 1e4 + 0.5) / 1e4;
}

std::vector<double> spectrum_modulus(const Sequence& s, std::size_t samples)
{
    if (samples == 0)
        throw InvalidInput("spectrum needs at least one sample");
    std::vector<double> out(samples);
    const auto v = s.values();
    for (std::size_t m = 0; m < samples; ++m)
    {
        const double t = static_cast<double>(m) / static_cast<double>(samples);
        const auto z = std::polar(1.0, 2.0 * std::numbers::pi * t);
        // Horner from the highest coefficient s_L down to s_1.
        std::complex<double> p{0.0, 0.0};
        for (std::size_t j = v.size(); j-- > 0;)
            p = p * z + static_cast<double>(v[j]);
        out[m] = std::abs(p);
    }
    return out;
}

}  // namespace binseq
