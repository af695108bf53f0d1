// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <ostream>
#include <string>

#include "widenkit/domain.hpp"
#include "widenkit/number.hpp"

namespace widenkit {

/// ⊥ or a well-formed integer interval [lo, hi] with lo ≤ hi, lo ≠ +inf, hi ≠ -inf.
class Interval {
  public:
    /// Bottom.
    Interval() = default;

    /// Throws std::invalid_argument if the pair is not well formed.
    Interval(ExtInt lo, ExtInt hi);

    static Interval bottom() { return Interval{}; }
    static Interval top() { return Interval{ExtInt::neg_inf(), ExtInt::pos_inf()}; }
    static Interval singleton(const Integer& n) { return Interval{n, n}; }
    static Interval at_least(const Integer& n) { return Interval{n, ExtInt::pos_inf()}; }
    static Interval at_most(const Integer& n) { return Interval{ExtInt::neg_inf(), n}; }

    [[nodiscard]] bool is_bottom() const { return bottom_; }
    [[nodiscard]] bool is_top() const { return !bottom_ && lo_.is_neg_inf() && hi_.is_pos_inf(); }
    [[nodiscard]] bool is_singleton() const { return !bottom_ && lo_.is_finite() && lo_ == hi_; }

    // Both require !is_bottom().
    [[nodiscard]] const ExtInt& lo() const;
    [[nodiscard]] const ExtInt& hi() const;

    [[nodiscard]] bool contains(const Integer& n) const;

    [[nodiscard]] bool leq(const Interval& other) const;
    [[nodiscard]] Interval join(const Interval& other) const;
    [[nodiscard]] Interval meet(const Interval& other) const;

    /// The classic widening that discards unstable bounds.
    [[nodiscard]] Interval widen(const Interval& next) const;

    [[nodiscard]] Interval operator+(const Interval& other) const;
    [[nodiscard]] Interval operator-(const Interval& other) const;
    [[nodiscard]] Interval operator-() const;
    [[nodiscard]] Interval scaled(const Integer& k) const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.bottom_ == b.bottom_ && (a.bottom_ || (a.lo_ == b.lo_ && a.hi_ == b.hi_));
    }

    /// "[0, +inf]", "[-inf, 3]", or "bottom".
    [[nodiscard]] std::string to_string() const;

  private:
    bool bottom_{true};
    ExtInt lo_;
    ExtInt hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

inline bool interval_leq(const Interval& a, const Interval& b) { return a.leq(b); }
inline Interval interval_join(const Interval& a, const Interval& b) { return a.join(b); }
inline Interval interval_meet(const Interval& a, const Interval& b) { return a.meet(b); }
inline Interval interval_widen_brutal(const Interval& u, const Interval& v) { return u.widen(v); }

struct IntervalDomain {
    using element = Interval;
    using concrete = Integer;

    static bool leq(const Interval& a, const Interval& b) { return a.leq(b); }
    static Interval join(const Interval& a, const Interval& b) { return a.join(b); }
    static Interval bottom() { return Interval::bottom(); }
    static bool is_bottom(const Interval& a) { return a.is_bottom(); }
    static bool concretizes(const Interval& a, const Integer& c) { return a.contains(c); }
};
static_assert(AbstractDomain<IntervalDomain>);

} // namespace widenkit
