#pragma once

#include <concepts>
#include <optional>

#include "qsym/qscalar.hpp"

namespace qsym {

// Commutative coefficient ring for Series<C>: ring operations, an action of
// Q(q), units detected by ring_inverse, and coefficientwise q-truncation.
template <class C>
concept CoefficientRing =
    std::copyable<C> && std::equality_comparable<C> &&
    std::constructible_from<C, QScalar> &&
    requires(const C& a, const C& b, const QScalar& s, int M) {
      { a + b } -> std::convertible_to<C>;
      { a - b } -> std::convertible_to<C>;
      { a * b } -> std::convertible_to<C>;
      { -a } -> std::convertible_to<C>;
      { a * C(s) } -> std::convertible_to<C>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { ring_inverse(a) } -> std::same_as<std::optional<C>>;
      { reduce_mod_q(a, M) } -> std::same_as<C>;
    };

}  // namespace qsym
