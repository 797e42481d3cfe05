#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lrc {

using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Accepts "p/q", "p" or "-p/q"; the result is canonicalized.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& x);

/// Exact commutative ring with decidable equality. Both Rational and
/// PolyScalar model it; the cumulant and Fock code is generic over it.
template <class S>
concept ExactRing = std::regular<S> && requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  S(0);
  S(1);
};

}  // namespace lrc
