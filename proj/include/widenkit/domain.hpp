// Copyright (c) widenkit contributors.
// SPDX-License-Identifier: MIT
#pragma once

#include <concepts>

namespace widenkit {

// The contract every abstract domain is written against. A domain is a
// stateless traits type naming its element type and the concrete values its
// elements denote.
//
//  - leq is a decidable preorder; antisymmetry is not required.
//  - concretizes(e, c) is the membership test c ∈ γ(e); it must be monotone
//    in e with respect to leq.
//  - join(a, b) is an upper bound of a and b and covers γ(a) ∪ γ(b).
//  - bottom() is least and concretizes nothing.
//
// Only the implication leq(a, b) ⇒ γ(a) ⊆ γ(b) is required; a domain may
// order elements more coarsely than γ-inclusion would allow.
template <typename D>
concept AbstractDomain = requires(const typename D::element& a, const typename D::element& b,
                                  const typename D::concrete& c) {
    typename D::element;
    typename D::concrete;
    { D::leq(a, b) } -> std::convertible_to<bool>;
    { D::join(a, b) } -> std::convertible_to<typename D::element>;
    { D::bottom() } -> std::convertible_to<typename D::element>;
    { D::is_bottom(a) } -> std::convertible_to<bool>;
    { D::concretizes(a, c) } -> std::convertible_to<bool>;
};

} // namespace widenkit
