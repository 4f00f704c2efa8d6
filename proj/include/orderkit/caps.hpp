// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace orderkit {

/// Instance-size limits. Every exhaustive routine checks its cap before
/// doing exponential work and throws Errc::InstanceTooLarge past it.
struct Caps {
    /// Carriers above this load fine but are flagged (FinitePoset::over_soft_cap).
    std::size_t carrier_soft = 64;
    /// Largest antichain / chain search, Perles recursion, Hall matching. At most 64.
    std::size_t oracle = 32;
    /// Minimum chain / antichain cover partition search.
    std::size_t cover_oracle = 10;
    /// Subset enumeration over left vertices in hall_condition.
    std::size_t subset = 20;
};

/// Hard ceiling for Caps::oracle; the searches use 64-bit masks.
inline constexpr std::size_t kMaskBits = 64;

}  // namespace orderkit
