// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace binseq {

/// A binary sequence s_1 ... s_L with every entry +1 or -1.
///
/// Values are immutable after construction. Positions are 0-based in code;
/// the mathematical notation in the docs uses 1-based indices.
class Sequence
{
public:
    /// Throws InvalidInput when `values` is empty or holds anything other
    /// than +1 / -1.
    explicit Sequence(std::vector<std::int8_t> values);

    /// Parses a string of '+' / '-' characters, e.g. "+++-".
    static Sequence parse(std::string_view signs);

    /// All +1 sequence of length `length`.
    static Sequence ones(std::size_t length);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::span<const std::int8_t> values() const noexcept { return values_; }

    [[nodiscard]] Sequence negated() const;
    [[nodiscard]] Sequence reversed() const;
    /// s'_i = (-1)^i s_i (1-based i).
    [[nodiscard]] Sequence alternated() const;
    /// Copy with position `pos` (0-based) sign-flipped.
    [[nodiscard]] Sequence flipped(std::size_t pos) const;

    /// '+' / '-' rendering, inverse of parse().
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<std::int8_t> values_;
};

/// Off-peak aperiodic autocorrelations C_1 ... C_{L-1} and their energy.
struct AutocorrelationProfile
{
    std::size_t length = 0;
    /// c[k - 1] holds C_k.
    std::vector<std::int64_t> c;
    std::int64_t energy = 0;

    /// C_k for 1 <= k <= L - 1.
    [[nodiscard]] std::int64_t lag(std::size_t k) const { return c.at(k - 1); }

    friend bool operator==(const AutocorrelationProfile&, const AutocorrelationProfile&) = default;
};

struct MeritReport
{
    std::size_t length = 0;
    std::int64_t energy = 0;
    /// Empty when energy is 0 (unbounded merit, only possible for L = 1).
    std::optional<double> merit_factor;
    /// Empty when L < 2.
    std::optional<std::int64_t> psl;
};

/// C_k = sum_{i=1}^{L-k} s_i s_{i+k}, computed exactly.
[[nodiscard]] AutocorrelationProfile autocorrelations(const Sequence& s);

/// E = sum_k C_k^2 over the off-peak lags.
[[nodiscard]] std::int64_t energy(const Sequence& s);

/// L^2 / (2E). Empty optional signals E = 0.
[[nodiscard]] std::optional<double> merit_factor(std::size_t length, std::int64_t energy);
[[nodiscard]] std::optional<double> merit_factor(const Sequence& s);

/// Peak sidelobe level max_k |C_k|; throws InvalidInput for L < 2.
[[nodiscard]] std::int64_t psl(const Sequence& s);

[[nodiscard]] MeritReport evaluate(const Sequence& s);

/// Round half-up to 4 decimals, the precision merit factors are published at.
[[nodiscard]] double round_merit(double f);

/// |p(e^{2 pi i t_m})| at t_m = m / samples for m = 0 .. samples-1, where
/// p(z) = sum_j s_j z^{j-1}. Throws InvalidInput when samples == 0.
[[nodiscard]] std::vector<double> spectrum_modulus(const Sequence& s, std::size_t samples);

/// Lowest energy any length-L sequence could reach: C_k has the parity of
/// L - k, so every lag with L - k odd contributes at least 1.
[[nodiscard]] constexpr std::int64_t parity_energy_bound(std::size_t length) noexcept
{
    return static_cast<std::int64_t>(length / 2);
}

}  // namespace binseq
