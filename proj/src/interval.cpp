// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#include "widenkit/interval.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace widenkit {

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    Integer n = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
        n = n * 10 + (text[i] - '0');
    }
    return negative ? Integer(-n) : n;
}

Integer floor_div(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    Integer q = num / den; // truncates toward zero
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("division by zero");
    }
    Integer q = num / den;
    if ((num % den != 0) && ((num < 0) == (den < 0))) {
        ++q;
    }
    return q;
}

ExtInt operator+(const ExtInt& a, const ExtInt& b) {
    if (a.is_finite() && b.is_finite()) {
        return ExtInt{a.value_ + b.value_};
    }
    if ((a.is_neg_inf() && b.is_pos_inf()) || (a.is_pos_inf() && b.is_neg_inf())) {
        throw std::domain_error("-inf + +inf is undefined");
    }
    return a.is_finite() ? b : a;
}

ExtInt operator-(const ExtInt& a) {
    switch (a.kind_) {
    case ExtInt::Kind::NegInf: return ExtInt::pos_inf();
    case ExtInt::Kind::PosInf: return ExtInt::neg_inf();
    case ExtInt::Kind::Finite: break;
    }
    return ExtInt{Integer(-a.value_)};
}

ExtInt ExtInt::scaled(const Integer& k) const {
    if (k == 0) {
        return ExtInt{0};
    }
    if (is_finite()) {
        return ExtInt{Integer(value_ * k)};
    }
    return k > 0 ? *this : -*this;
}

std::string ExtInt::to_string() const {
    switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
    }
    return value_.str();
}

std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.to_string(); }

Interval::Interval(ExtInt lo, ExtInt hi) : bottom_(false), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.is_pos_inf() || hi_.is_neg_inf() || hi_ < lo_) {
        throw std::invalid_argument("malformed interval [" + lo_.to_string() + ", " + hi_.to_string() + "]");
    }
}

const ExtInt& Interval::lo() const {
    if (bottom_) {
        throw std::logic_error("lower bound of bottom interval");
    }
    return lo_;
}

const ExtInt& Interval::hi() const {
    if (bottom_) {
        throw std::logic_error("upper bound of bottom interval");
    }
    return hi_;
}

bool Interval::contains(const Integer& n) const {
    if (bottom_) {
        return false;
    }
    const ExtInt x{n};
    return lo_ <= x && x <= hi_;
}

bool Interval::leq(const Interval& other) const {
    if (bottom_) {
        return true;
    }
    if (other.bottom_) {
        return false;
    }
    return other.lo_ <= lo_ && hi_ <= other.hi_;
}

Interval Interval::join(const Interval& other) const {
    if (bottom_) {
        return other;
    }
    if (other.bottom_) {
        return *this;
    }
    return Interval{std::min(lo_, other.lo_), std::max(hi_, other.hi_)};
}

Interval Interval::meet(const Interval& other) const {
    if (bottom_ || other.bottom_) {
        return bottom();
    }
    ExtInt lo = std::max(lo_, other.lo_);
    ExtInt hi = std::min(hi_, other.hi_);
    if (hi < lo) {
        return bottom();
    }
    return Interval{std::move(lo), std::move(hi)};
}

Interval Interval::widen(const Interval& next) const {
    if (bottom_) {
        return next;
    }
    if (next.bottom_) {
        return *this;
    }
    ExtInt lo = lo_ <= next.lo_ ? lo_ : ExtInt::neg_inf();
    ExtInt hi = next.hi_ <= hi_ ? hi_ : ExtInt::pos_inf();
    return Interval{std::move(lo), std::move(hi)};
}

Interval Interval::operator+(const Interval& other) const {
    if (bottom_ || other.bottom_) {
        return bottom();
    }
    return Interval{lo_ + other.lo_, hi_ + other.hi_};
}

Interval Interval::operator-() const {
    if (bottom_) {
        return bottom();
    }
    return Interval{-hi_, -lo_};
}

Interval Interval::operator-(const Interval& other) const { return *this + (-other); }

Interval Interval::scaled(const Integer& k) const {
    if (bottom_) {
        return bottom();
    }
    if (k >= 0) {
        return Interval{lo_.scaled(k), hi_.scaled(k)};
    }
    return Interval{hi_.scaled(k), lo_.scaled(k)};
}

std::string Interval::to_string() const {
    if (bottom_) {
        return "bottom";
    }
    std::ostringstream os;
    os << '[' << lo_ << ", " << hi_ << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.to_string(); }

} // namespace widenkit
