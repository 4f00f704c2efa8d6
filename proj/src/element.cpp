// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#include "orderkit/element.hpp"

#include "orderkit/error.hpp"

namespace orderkit {

std::string Element::to_string() const {
    if (is_int()) return std::to_string(as_int());
    return std::get<std::string>(value_);
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

std::string to_string(const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : s) {
        if (!first) out += ",";
        out += e.to_string();
        first = false;
    }
    return out + "}";
}

std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::EmptyCarrier: return "EmptyCarrier";
        case Errc::CycleDetected: return "CycleDetected";
        case Errc::ElementNotInCarrier: return "ElementNotInCarrier";
        case Errc::NotASubset: return "NotASubset";
        case Errc::InstanceTooLarge: return "InstanceTooLarge";
        case Errc::InvalidCover: return "InvalidCover";
        case Errc::NotASmallestCover: return "NotASmallestCover";
        case Errc::InvalidGraph: return "InvalidGraph";
        case Errc::NotASubsetOfLeft: return "NotASubsetOfLeft";
        case Errc::WrongCardinality: return "WrongCardinality";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::DuplicateValue: return "DuplicateValue";
        case Errc::ParseError: return "ParseError";
        case Errc::ValidationError: return "ValidationError";
    }
    return "Unknown";
}

}  // namespace orderkit
