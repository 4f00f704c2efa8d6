// Copyright (c) orderkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <variant>

namespace orderkit {

/// Opaque element label. Integer labels order numerically and precede all
/// string labels; strings order bytewise. The namespace tag separates
/// vertex kinds when two label spaces share one poset (set-family graphs).
class Element {
  public:
    using Value = std::variant<std::int64_t, std::string>;

    Element() = default;
    template <std::integral T>
    Element(T v) : value_(static_cast<std::int64_t>(v)) {}
    Element(std::string s) : value_(std::move(s)) {}
    Element(const char* s) : value_(std::string(s)) {}

    [[nodiscard]] const Value& value() const { return value_; }
    [[nodiscard]] std::uint8_t tag() const { return tag_; }
    [[nodiscard]] bool is_int() const { return std::holds_alternative<std::int64_t>(value_); }
    [[nodiscard]] std::int64_t as_int() const { return std::get<std::int64_t>(value_); }

    [[nodiscard]] Element with_tag(std::uint8_t tag) const {
        Element e = *this;
        e.tag_ = tag;
        return e;
    }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Element&, const Element&) = default;
    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        if (auto c = a.tag_ <=> b.tag_; c != 0) return c;
        return a.value_ <=> b.value_;
    }

  private:
    std::uint8_t tag_ = 0;
    Value value_ = std::int64_t{0};
};

std::ostream& operator<<(std::ostream& os, const Element& e);

using ElementSet = std::set<Element>;
using ElementPair = std::pair<Element, Element>;

std::string to_string(const ElementSet& s);

}  // namespace orderkit
