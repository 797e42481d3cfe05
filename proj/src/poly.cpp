#include "lrc/poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace lrc {

std::string SymbolId::to_string() const {
  std::string out = kind == SymbolKind::alpha ? "a[" : "b[";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(word[k]);
  }
  return out + "]";
}

SymbolId SymbolId::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed symbol \"" + std::string(text) + "\"");
  };
  if (text.size() < 4 || text[1] != '[' || text.back() != ']') fail();
  SymbolId s;
  if (text[0] == 'a')
    s.kind = SymbolKind::alpha;
  else if (text[0] == 'b')
    s.kind = SymbolKind::beta;
  else
    fail();
  std::string_view body = text.substr(2, text.size() - 3);
  while (true) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || value < 1) fail();
    s.word.push_back(value);
    body.remove_prefix(static_cast<std::size_t>(ptr - body.data()));
    if (body.empty()) break;
    if (body.front() != ',') fail();
    body.remove_prefix(1);
  }
  return s;
}

PolyScalar::PolyScalar(const Rational& c) {
  if (!is_zero(c)) terms_.emplace(Monomial{}, c);
}

PolyScalar PolyScalar::symbol(SymbolId s) {
  if (s.word.empty()) throw std::invalid_argument("symbol with empty word");
  PolyScalar p;
  p.terms_.emplace(Monomial{std::move(s)}, Rational(1));
  return p;
}

PolyScalar PolyScalar::alpha(std::vector<int> word) {
  return symbol({SymbolKind::alpha, std::move(word)});
}

PolyScalar PolyScalar::beta(std::vector<int> word) {
  return symbol({SymbolKind::beta, std::move(word)});
}

Rational PolyScalar::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolyScalar::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
  PolyScalar out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      PolyScalar::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  return out;
}

PolyScalar& PolyScalar::operator*=(const PolyScalar& o) { return *this = *this * o; }

PolyScalar& PolyScalar::operator*=(const Rational& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

PolyScalar operator-(PolyScalar a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string PolyScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1 && !m.empty();
    if (!unit) out += lrc::to_string(mag);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k || !unit) out += '*';
      out += m[k].to_string();
    }
  }
  return out;
}

}  // namespace lrc
