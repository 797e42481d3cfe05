#include "lrc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lrc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: \"" + std::string(text) +
                                "\"");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational r;
  r.get_num() = BigInt(n, 10);
  r.get_den() = BigInt(std::string(den), 10);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator in \"" + std::string(text) +
                                "\"");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace lrc
