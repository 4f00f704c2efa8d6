// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orderkit {

enum class Errc {
    EmptyCarrier,
    CycleDetected,
    ElementNotInCarrier,
    NotASubset,
    InstanceTooLarge,
    InvalidCover,
    NotASmallestCover,
    InvalidGraph,
    NotASubsetOfLeft,
    WrongCardinality,
    EmptyInput,
    DuplicateValue,
    ParseError,
    ValidationError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

}  // namespace orderkit
