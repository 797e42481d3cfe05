#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrc/chi_word.hpp"
#include "lrc/deque.hpp"
#include "lrc/partition.hpp"
#include "lrc/scalar.hpp"

namespace lrc {

/// φ on words over the opaque element identifiers 0..element_count-1, for
/// words of length 1..max_length.
template <ExactRing S>
class MomentFunctional {
 public:
  using Evaluator = std::function<S(std::span<const int>)>;

  MomentFunctional(int element_count, int max_length, Evaluator eval)
      : element_count_(element_count), max_length_(max_length), eval_(std::move(eval)) {
    if (element_count < 1 || max_length < 1)
      throw std::invalid_argument("moment functional needs elements and length >= 1");
  }

  int element_count() const { return element_count_; }
  int max_length() const { return max_length_; }

  S operator()(std::span<const int> word) const {
    if (word.empty() || static_cast<int>(word.size()) > max_length_)
      throw std::invalid_argument("moment requested on a word of length " +
                                  std::to_string(word.size()));
    for (int a : word)
      if (a < 0 || a >= element_count_)
        throw std::invalid_argument("element id " + std::to_string(a) + " out of range");
    return eval_(word);
  }

 private:
  int element_count_;
  int max_length_;
  Evaluator eval_;
};

namespace detail {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept {
    std::size_t h = key.size();
    for (int x : key) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

inline void require_lengths(const ChiWord& chi, std::size_t word_size) {
  if (static_cast<std::size_t>(chi.size()) != word_size)
    throw std::invalid_argument("chi word has length " + std::to_string(chi.size()) +
                                " but element word has length " +
                                std::to_string(word_size));
}

// Restriction of (chi, word) to a block, packed as element*2 + side.
inline std::vector<int> restricted_key(const ChiWord& chi, std::span<const int> word,
                                       const Partition::Block& block) {
  std::vector<int> key;
  key.reserve(block.size());
  for (int m : block) key.push_back(word[m - 1] * 2 + (chi[m] == Side::right));
  return key;
}

inline std::pair<ChiWord, std::vector<int>> unpack(const std::vector<int>& key) {
  std::vector<Side> sides;
  std::vector<int> word;
  for (int k : key) {
    sides.push_back(k % 2 ? Side::right : Side::left);
    word.push_back(k / 2);
  }
  return {ChiWord(std::move(sides)), std::move(word)};
}

}  // namespace detail

/// Evaluates κ_χ by the recursion over P^(χ)(n), memoizing on restricted
/// (χ, word) pairs. One instance is not safe for concurrent use.
template <ExactRing S>
class CumulantEvaluator {
 public:
  explicit CumulantEvaluator(const MomentFunctional<S>& phi) : phi_(&phi) {}

  S operator()(const ChiWord& chi, std::span<const int> word) {
    detail::require_lengths(chi, word.size());
    std::vector<int> key;
    key.reserve(word.size());
    for (int m = 1; m <= chi.size(); ++m)
      key.push_back(word[m - 1] * 2 + (chi[m] == Side::right));
    return by_key(key);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  const S& by_key(const std::vector<int>& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto [chi, word] = detail::unpack(key);
    S value = (*phi_)(word);
    if (word.size() > 1) {
      for (const Partition& pi : *pchi_cached(chi)) {
        if (pi.block_count() == 1) continue;
        S product(1);
        for (const auto& block : pi.blocks()) {
          product = product * by_key(detail::restricted_key(chi, word, block));
          if (is_zero(product)) break;
        }
        value = value - product;
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

  const MomentFunctional<S>* phi_;
  std::unordered_map<std::vector<int>, S, detail::KeyHash> memo_;
};

/// κ_χ(a_1, ..., a_n) with a fresh memo table.
template <ExactRing S>
S lr_cumulant(const ChiWord& chi, std::span<const int> word, const MomentFunctional<S>& phi) {
  CumulantEvaluator<S> eval(phi);
  return eval(chi, word);
}

/// Σ_{π ∈ P^(χ)(n)} Π_{V ∈ π} κ(χ|V, word|V).
template <ExactRing S, class Kappa>
S moment_from_cumulants(const ChiWord& chi, std::span<const int> word, Kappa&& kappa) {
  detail::require_lengths(chi, word.size());
  S total(0);
  for (const Partition& pi : *pchi_cached(chi)) {
    S product(1);
    for (const auto& block : pi.blocks()) {
      std::vector<int> sub;
      for (int m : block) sub.push_back(word[m - 1]);
      product = product * S(kappa(chi.restrict_to(block), std::span<const int>(sub)));
    }
    total = total + product;
  }
  return total;
}

/// κ_n(a_1, ..., a_n). Computed with χ = (l, ..., l) and checked against
/// χ = (r, ..., r); a mismatch raises InvariantViolation.
template <ExactRing S>
S free_cumulant(std::span<const int> word, const MomentFunctional<S>& phi) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("free_cumulant on an empty word");
  CumulantEvaluator<S> eval(phi);
  S left = eval(ChiWord::constant(n, Side::left), word);
  S right = eval(ChiWord::constant(n, Side::right), word);
  if (!(left == right))
    throw InvariantViolation("free cumulant differs between all-left and all-right words");
  return left;
}

template <ExactRing S>
struct BifreeViolation {
  ChiWord chi;
  std::vector<int> indices;  // 1-based pair indices i_1..i_n
  S value;
};

template <ExactRing S>
struct BifreeReport {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<BifreeViolation<S>> violations;
};

/// Checks that every mixed κ_χ(c_{i_1;h_1}, ..., c_{i_n;h_n}) vanishes for
/// 2 <= n <= max_n, where c_{i;l} = pairs[i-1].first, c_{i;r} = pairs[i-1].second.
template <ExactRing S>
BifreeReport<S> is_combinatorially_bifree_upto(const std::vector<std::pair<int, int>>& pairs,
                                               const MomentFunctional<S>& phi, int max_n) {
  if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  if (pairs.empty()) throw std::invalid_argument("no pairs given");
  const int d = static_cast<int>(pairs.size());
  BifreeReport<S> report;
  CumulantEvaluator<S> eval(phi);
  for (int n = 2; n <= max_n; ++n) {
    std::vector<int> idx(n, 1);
    while (true) {
      bool mixed = false;
      for (int m = 1; m < n; ++m) mixed = mixed || idx[m] != idx[0];
      if (mixed) {
        for (const ChiWord& chi : enumerate_chi_words(n)) {
          std::vector<int> word(n);
          for (int m = 1; m <= n; ++m) {
            const auto& [a, b] = pairs[idx[m - 1] - 1];
            word[m - 1] = chi[m] == Side::left ? a : b;
          }
          S value = eval(chi, word);
          ++report.checked;
          if (!is_zero(value)) {
            report.holds = false;
            report.violations.push_back({chi, idx, std::move(value)});
          }
        }
      }
      int k = n - 1;
      while (k >= 0 && idx[k] == d) idx[k--] = 1;
      if (k < 0) break;
      ++idx[k];
    }
  }
  return report;
}

}  // namespace lrc
