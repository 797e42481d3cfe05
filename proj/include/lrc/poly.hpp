#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lrc/scalar.hpp"

namespace lrc {

enum class SymbolKind : unsigned char { alpha, beta };

/// Formal coefficient α_w or β_w of an index word w.
struct SymbolId {
  SymbolKind kind;
  std::vector<int> word;

  /// "a[1,2]" or "b[3]".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static SymbolId parse(std::string_view text);

  friend bool operator==(const SymbolId&, const SymbolId&) = default;
  /// kind, then word length, then lexicographic word.
  friend std::strong_ordering operator<=>(const SymbolId& a, const SymbolId& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    if (auto c = a.word.size() <=> b.word.size(); c != 0) return c;
    return a.word <=> b.word;
  }
};

/// Sparse polynomial with rational coefficients in the symbols α_w, β_w.
/// A monomial is a sorted list of symbols (repetition = power); the empty
/// monomial is the constant term. Zero coefficients are never stored.
class PolyScalar {
 public:
  using Monomial = std::vector<SymbolId>;
  using Terms = std::map<Monomial, Rational>;

  PolyScalar() = default;
  explicit PolyScalar(int c) : PolyScalar(Rational(c)) {}
  explicit PolyScalar(const Rational& c);

  static PolyScalar symbol(SymbolId s);
  static PolyScalar alpha(std::vector<int> word);
  static PolyScalar beta(std::vector<int> word);

  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool zero() const { return terms_.empty(); }

  /// Coefficient of a given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  PolyScalar& operator+=(const PolyScalar& o);
  PolyScalar& operator-=(const PolyScalar& o);
  PolyScalar& operator*=(const PolyScalar& o);
  PolyScalar& operator*=(const Rational& c);

  friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
  friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
  friend PolyScalar operator*(PolyScalar a, const Rational& c) { return a *= c; }
  friend PolyScalar operator*(const Rational& c, PolyScalar a) { return a *= c; }
  friend PolyScalar operator-(PolyScalar a);

  friend bool operator==(const PolyScalar&, const PolyScalar&) = default;

  /// Human-readable form, e.g. "a[1]*b[2] - 1/2*a[1,2]"; "0" when zero.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const PolyScalar& p) { return p.zero(); }

inline std::ostream& operator<<(std::ostream& os, const PolyScalar& p) {
  return os << p.to_string();
}

}  // namespace lrc
