// Copyright 2026 The binseq Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace binseq {

/// Raised when an argument violates an operation's precondition
/// (empty sequence, malformed hex, out-of-range flip index, over-cap oracle
/// length, inconsistent search configuration, ...).
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace binseq
