// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace widenkit {

using Integer = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal integer of arbitrary width.
/// Throws std::invalid_argument on malformed input.
Integer parse_integer(std::string_view text);

Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

/// An integer extended with -inf and +inf. Used for interval endpoints.
class ExtInt {
  public:
    enum class Kind { NegInf, Finite, PosInf };

    ExtInt() = default;
    ExtInt(Integer n) : kind_(Kind::Finite), value_(std::move(n)) {} // NOLINT(google-explicit-constructor)
    ExtInt(long long n) : kind_(Kind::Finite), value_(n) {}          // NOLINT(google-explicit-constructor)
    ExtInt(int n) : kind_(Kind::Finite), value_(n) {}                // NOLINT(google-explicit-constructor)

    static ExtInt neg_inf() { return ExtInt{Kind::NegInf}; }
    static ExtInt pos_inf() { return ExtInt{Kind::PosInf}; }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_finite() const { return kind_ == Kind::Finite; }
    [[nodiscard]] bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    [[nodiscard]] bool is_pos_inf() const { return kind_ == Kind::PosInf; }

    // Only meaningful when is_finite().
    [[nodiscard]] const Integer& value() const { return value_; }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ != b.kind_) {
            return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
        }
        if (a.kind_ != Kind::Finite || a.value_ == b.value_) {
            return std::strong_ordering::equal;
        }
        return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    // Sums of opposite infinities are never formed by interval arithmetic
    // (lower bounds are never +inf, upper bounds never -inf); they throw.
    friend ExtInt operator+(const ExtInt& a, const ExtInt& b);
    friend ExtInt operator-(const ExtInt& a);

    /// Multiplication by a finite scalar. 0 * inf is 0: endpoints bound finite values.
    [[nodiscard]] ExtInt scaled(const Integer& k) const;

    [[nodiscard]] std::string to_string() const;

  private:
    explicit ExtInt(Kind k) : kind_(k) {}

    Kind kind_{Kind::Finite};
    Integer value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExtInt& x);

} // namespace widenkit
