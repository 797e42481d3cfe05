#include "lrc/fock.hpp"

#include <random>

namespace lrc {

std::string Generator::to_string() const {
  std::string out(1, side == Side::left ? 'L' : 'R');
  out += std::to_string(index);
  if (star) out += '*';
  return out;
}

bool apply_generator(const Generator& g, FockWord& w) {
  if (!g.star) {
    if (g.side == Side::left)
      w.insert(w.begin(), g.index);
    else
      w.push_back(g.index);
    return true;
  }
  if (w.empty()) return false;
  if (g.side == Side::left) {
    if (w.front() != g.index) return false;
    w.erase(w.begin());
  } else {
    if (w.back() != g.index) return false;
    w.pop_back();
  }
  return true;
}

// ---------------------------------------------------------------------------

CoefficientTable::CoefficientTable(int d, int n_o, Mode mode)
    : d_(d), n_o_(n_o), mode_(mode) {
  if (d < 1) throw std::invalid_argument("coefficient table needs d >= 1");
  if (n_o < 1) throw std::invalid_argument("coefficient table needs n_o >= 1");
}

CoefficientTable CoefficientTable::symbolic(int d, int n_o, Support support) {
  CoefficientTable t(d, n_o, Mode::symbolic);
  t.support_ = std::move(support);
  return t;
}

CoefficientTable CoefficientTable::separated(int d, int n_o) {
  return symbolic(d, n_o, [](SymbolKind, std::span<const int> w) {
    return std::all_of(w.begin(), w.end(), [&](int i) { return i == w.front(); });
  });
}

CoefficientTable CoefficientTable::concrete(int d, int n_o, Values alpha, Values beta) {
  CoefficientTable t(d, n_o, Mode::concrete);
  for (Values* values : {&alpha, &beta})
    for (auto it = values->begin(); it != values->end();) {
      t.check_word(it->first);
      if (static_cast<int>(it->first.size()) > n_o)
        throw std::invalid_argument("coefficient word longer than n_o = " +
                                    std::to_string(n_o));
      if (is_zero(it->second))
        it = values->erase(it);
      else
        ++it;
    }
  t.alpha_ = std::move(alpha);
  t.beta_ = std::move(beta);
  return t;
}

CoefficientTable CoefficientTable::random(int d, int n_o, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Values values[2];
  for (auto& table : values)
    for (int len = 1; len <= n_o; ++len) {
      std::vector<int> w(len, 1);
      while (true) {
        const long num = static_cast<long>(gen() % 11) - 5;
        const long den = static_cast<long>(gen() % 4) + 1;
        Rational r(num, den);
        r.canonicalize();
        table.emplace(w, r);
        int k = len - 1;
        while (k >= 0 && w[k] == d) w[k--] = 1;
        if (k < 0) break;
        ++w[k];
      }
    }
  return concrete(d, n_o, std::move(values[0]), std::move(values[1]));
}

void CoefficientTable::check_word(std::span<const int> w) const {
  if (w.empty()) throw std::invalid_argument("coefficient word is empty");
  for (int i : w)
    if (i < 1 || i > d_)
      throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(d_));
}

bool CoefficientTable::in_support(const SymbolId& s) const {
  if (static_cast<int>(s.word.size()) > n_o_) return false;
  if (mode_ == Mode::symbolic) return !support_ || support_(s.kind, s.word);
  const Values& values = s.kind == SymbolKind::alpha ? alpha_ : beta_;
  return values.count(s.word) > 0;
}

Rational CoefficientTable::value(const SymbolId& s) const {
  if (mode_ != Mode::concrete) throw std::logic_error("symbolic table has no values");
  const Values& values = s.kind == SymbolKind::alpha ? alpha_ : beta_;
  auto it = values.find(s.word);
  return it == values.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> pick(std::span<const int> omega, const std::vector<int>& positions,
                      bool reversed) {
  std::vector<int> out;
  if (reversed)
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) out.push_back(omega[*it - 1]);
  else
    for (int m : positions) out.push_back(omega[m - 1]);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

SymbolId reverse_bimixture_symbol(std::span<const int> omega, const ChiWord& chi) {
  detail::require_lengths(chi, omega.size());
  const auto left = chi.left_positions();
  const auto right = chi.right_positions();
  if (chi[1] == Side::left)
    return {SymbolKind::alpha, concat(pick(omega, right, false), pick(omega, left, true))};
  return {SymbolKind::beta, concat(pick(omega, left, false), pick(omega, right, true))};
}

SymbolId bimixture_symbol(std::span<const int> omega, const ChiWord& chi) {
  detail::require_lengths(chi, omega.size());
  const auto left = chi.left_positions();
  const auto right = chi.right_positions();
  if (chi[chi.size()] == Side::left)
    return {SymbolKind::alpha, concat(pick(omega, right, true), pick(omega, left, false))};
  return {SymbolKind::beta, concat(pick(omega, left, true), pick(omega, right, false))};
}

}  // namespace lrc
