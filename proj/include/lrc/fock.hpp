#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrc/chi_word.hpp"
#include "lrc/cumulants.hpp"
#include "lrc/deque.hpp"
#include "lrc/lukasiewicz.hpp"
#include "lrc/poly.hpp"
#include "lrc/scalar.hpp"

namespace lrc {

// ---------------------------------------------------------------------------
// Vectors

/// Basis word e_{i_1} ⊗ ... ⊗ e_{i_n}; the empty word is ξ_vac.
using FockWord = std::vector<int>;

/// Finitely supported vector of the full Fock space. Zero coefficients are
/// never stored.
template <ExactRing S>
class BasicFockVector {
 public:
  using Terms = std::map<FockWord, S>;

  BasicFockVector() = default;

  static BasicFockVector vacuum() { return basis({}); }
  static BasicFockVector basis(FockWord w, S c = S(1)) {
    BasicFockVector v;
    v.add(std::move(w), c);
    return v;
  }

  void add(const FockWord& w, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const FockWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }
  S vacuum_coefficient() const { return coefficient({}); }

  /// ⟨x, y⟩ = Σ_w x_w y_w (conjugation is the identity on the rings used).
  friend S inner(const BasicFockVector& x, const BasicFockVector& y) {
    S total(0);
    for (const auto& [w, c] : x.terms_) {
      auto it = y.terms_.find(w);
      if (it != y.terms_.end()) total = total + c * it->second;
    }
    return total;
  }

  friend bool operator==(const BasicFockVector&, const BasicFockVector&) = default;

 private:
  Terms terms_;
};

using FockVector = BasicFockVector<PolyScalar>;

// ---------------------------------------------------------------------------
// Generators and operator expressions

/// One of L_i, R_i, L_i*, R_i*.
struct Generator {
  Side side;
  int index;
  bool star;

  /// "L1", "R2*", ...
  std::string to_string() const;
  Generator adjoint() const { return {side, index, !star}; }
  /// Change in word length when the generator does not kill the word.
  int delta() const { return star ? -1 : 1; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator L(int i) { return {Side::left, i, false}; }
inline Generator R(int i) { return {Side::right, i, false}; }
inline Generator Lstar(int i) { return {Side::left, i, true}; }
inline Generator Rstar(int i) { return {Side::right, i, true}; }

/// Applies g to a single word in place; returns false if the word is killed.
bool apply_generator(const Generator& g, FockWord& w);

template <ExactRing S>
BasicFockVector<S> apply_generator(const Generator& g, const BasicFockVector<S>& v) {
  BasicFockVector<S> out;
  for (const auto& [w, c] : v.terms()) {
    FockWord image = w;
    if (apply_generator(g, image)) out.add(image, c);
  }
  return out;
}

template <ExactRing S>
class CompiledOperator;

/// Finite sum of coefficient * (g_1 g_2 ... g_k), applied right to left.
/// Products are kept reduced under L_i* L_j = δ_ij I and R_i* R_j = δ_ij I.
template <ExactRing S>
class BasicOperatorExpr {
 public:
  using Product = std::vector<Generator>;
  using Terms = std::map<Product, S>;

  BasicOperatorExpr() = default;

  static BasicOperatorExpr identity() { return scalar(S(1)); }
  static BasicOperatorExpr scalar(const S& c) {
    BasicOperatorExpr e;
    e.add({}, c);
    return e;
  }
  static BasicOperatorExpr generator(const Generator& g) { return product({g}); }
  static BasicOperatorExpr product(const Product& gs, const S& c = S(1)) {
    BasicOperatorExpr e = scalar(c);
    for (const Generator& g : gs) {
      BasicOperatorExpr next;
      for (const auto& [p, coeff] : e.terms_) {
        Product q = p;
        if (append_reduced(q, {g})) next.add(q, coeff);
      }
      e = std::move(next);
    }
    return e;
  }

  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void add(const Product& p, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicOperatorExpr& operator+=(const BasicOperatorExpr& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  friend BasicOperatorExpr operator+(BasicOperatorExpr a, const BasicOperatorExpr& b) {
    return a += b;
  }
  friend BasicOperatorExpr operator*(const S& c, const BasicOperatorExpr& e) {
    BasicOperatorExpr out;
    for (const auto& [p, coeff] : e.terms_) out.add(p, c * coeff);
    return out;
  }

  /// Composition: (a * b)(v) = a(b(v)).
  friend BasicOperatorExpr operator*(const BasicOperatorExpr& a, const BasicOperatorExpr& b) {
    BasicOperatorExpr out;
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) {
        Product p = pa;
        if (append_reduced(p, pb)) out.add(p, ca * cb);
      }
    return out;
  }

  friend bool operator==(const BasicOperatorExpr&, const BasicOperatorExpr&) = default;

  BasicFockVector<S> apply(const BasicFockVector<S>& v,
                           std::optional<int> max_length = std::nullopt) const;

  /// Smallest length change over all terms (0 for the zero operator).
  int min_delta() const {
    int best = 0;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      int d = 0;
      for (const Generator& g : p) d += g.delta();
      best = first ? d : std::min(best, d);
      first = false;
    }
    return best;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + scalar_string(c) + ")";
      for (const Generator& g : p) out += " " + g.to_string();
    }
    return out;
  }

 private:
  static std::string scalar_string(const S& c) {
    if constexpr (std::is_same_v<S, PolyScalar>)
      return c.to_string();
    else
      return lrc::to_string(c);
  }

  // Appends `tail` to `p`, cancelling X_i* X_j pairs of the same side at the
  // junction. Returns false if the product is zero.
  static bool append_reduced(Product& p, const Product& tail) {
    std::size_t k = 0;
    while (k < tail.size() && !p.empty()) {
      const Generator& a = p.back();
      const Generator& b = tail[k];
      if (!(a.star && !b.star && a.side == b.side)) break;
      if (a.index != b.index) return false;
      p.pop_back();
      ++k;
    }
    p.insert(p.end(), tail.begin() + static_cast<std::ptrdiff_t>(k), tail.end());
    return true;
  }

  Terms terms_;
};

using OperatorExpr = BasicOperatorExpr<PolyScalar>;

/// Reverses each product, stars/unstars each generator; coefficients are
/// left unchanged (conjugation is the identity on the rings used).
template <ExactRing S>
BasicOperatorExpr<S> adjoint(const BasicOperatorExpr<S>& e) {
  BasicOperatorExpr<S> out;
  for (const auto& [p, c] : e.terms()) {
    typename BasicOperatorExpr<S>::Product q;
    for (auto it = p.rbegin(); it != p.rend(); ++it) q.push_back(it->adjoint());
    out += BasicOperatorExpr<S>::product(q, c);
  }
  return out;
}

/// An operator expression compiled into a trie in application order, so
/// that words killed by an annihilator prune whole groups of terms.
template <ExactRing S>
class CompiledOperator {
 public:
  explicit CompiledOperator(const BasicOperatorExpr<S>& e) : root_(std::make_unique<Node>()) {
    for (const auto& [p, c] : e.terms()) {
      Node* node = root_.get();
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        auto found = std::find_if(node->children.begin(), node->children.end(),
                                  [&](const auto& ch) { return ch.first == *it; });
        if (found == node->children.end()) {
          node->children.emplace_back(*it, std::make_unique<Node>());
          found = std::prev(node->children.end());
        }
        node = found->second.get();
      }
      node->coeff = c;
    }
    finish(*root_);
    min_delta_ = root_->min_delta;
  }

  /// Largest possible decrease in word length (0 if none).
  int max_decrease() const { return std::max(0, -min_delta_); }

  BasicFockVector<S> apply(const BasicFockVector<S>& v,
                           std::optional<int> max_length = std::nullopt) const {
    BasicFockVector<S> out;
    for (const auto& [w, c] : v.terms()) {
      FockWord word = w;
      walk(*root_, word, c, max_length, out);
    }
    return out;
  }

 private:
  struct Node {
    std::optional<S> coeff;
    std::vector<std::pair<Generator, std::unique_ptr<Node>>> children;
    int min_delta = 0;  // over terms ending in this subtree, relative to here
  };

  static int finish(Node& node) {
    bool any = node.coeff.has_value();
    int best = 0;
    for (auto& [g, child] : node.children) {
      int d = g.delta() + finish(*child);
      best = any ? std::min(best, d) : d;
      any = true;
    }
    node.min_delta = best;
    return best;
  }

  static void walk(const Node& node, FockWord& word, const S& c,
                   const std::optional<int>& max_length, BasicFockVector<S>& out) {
    const int len = static_cast<int>(word.size());
    if (max_length && len + node.min_delta > *max_length) return;
    if (node.coeff && (!max_length || len <= *max_length)) out.add(word, c * *node.coeff);
    for (const auto& [g, child] : node.children) {
      if (max_length && len + g.delta() + child->min_delta > *max_length) continue;
      FockWord next = word;
      if (!apply_generator(g, next)) continue;
      walk(*child, next, c, max_length, out);
    }
  }

  std::unique_ptr<Node> root_;
  int min_delta_ = 0;
};

template <ExactRing S>
BasicFockVector<S> BasicOperatorExpr<S>::apply(const BasicFockVector<S>& v,
                                               std::optional<int> max_length) const {
  return CompiledOperator<S>(*this).apply(v, max_length);
}

/// Coefficient of ξ_vac in (op_1 ∘ ... ∘ op_n)(ξ_vac). Words that can no
/// longer return to the vacuum are dropped after each step.
template <ExactRing S>
S vacuum_expectation(std::span<const CompiledOperator<S>* const> ops) {
  std::vector<int> budget(ops.size() + 1, 0);  // budget[k]: decrease available from ops[0..k)
  for (std::size_t k = 0; k < ops.size(); ++k) budget[k + 1] = budget[k] + ops[k]->max_decrease();
  BasicFockVector<S> v = BasicFockVector<S>::vacuum();
  for (std::size_t k = ops.size(); k-- > 0;) {
    v = ops[k]->apply(v, budget[k]);
    if (v.zero()) return S(0);
  }
  return v.vacuum_coefficient();
}

template <ExactRing S>
S vacuum_expectation(std::span<const BasicOperatorExpr<S>> ops) {
  std::vector<CompiledOperator<S>> compiled;
  compiled.reserve(ops.size());
  for (const auto& op : ops) compiled.emplace_back(op);
  std::vector<const CompiledOperator<S>*> ptrs;
  for (const auto& c : compiled) ptrs.push_back(&c);
  return vacuum_expectation<S>(std::span<const CompiledOperator<S>* const>(ptrs));
}

// ---------------------------------------------------------------------------
// Coefficient tables

/// The coefficients α_w of f and β_w of g, for words over {1..d} of length
/// 1..n_o. Symbolic tables hand out formal symbols; concrete tables hold
/// rationals (absent words are zero).
class CoefficientTable {
 public:
  enum class Mode { symbolic, concrete };
  using Support = std::function<bool(SymbolKind, std::span<const int>)>;
  using Values = std::map<std::vector<int>, Rational>;

  /// Every α_w, β_w with |w| <= n_o is an independent symbol, unless
  /// `support` rejects it, in which case it is zero.
  static CoefficientTable symbolic(int d, int n_o, Support support = {});
  /// f = Σ f_i(z_i), g = Σ g_i(z_i): only constant words (i, ..., i) survive.
  static CoefficientTable separated(int d, int n_o);
  /// Throws std::invalid_argument on words out of range or longer than n_o.
  static CoefficientTable concrete(int d, int n_o, Values alpha, Values beta);
  /// Every coefficient drawn from {-5..5}/{1..4} by a seeded Mersenne twister.
  static CoefficientTable random(int d, int n_o, std::uint64_t seed);

  int d() const { return d_; }
  int n_o() const { return n_o_; }
  Mode mode() const { return mode_; }
  const Values& alpha_values() const { return alpha_; }
  const Values& beta_values() const { return beta_; }

  /// False when the coefficient is structurally zero.
  bool in_support(const SymbolId& s) const;

  /// Concrete tables only.
  Rational value(const SymbolId& s) const;

  template <ExactRing S>
  S coefficient(const SymbolId& s) const {
    check_word(s.word);
    if (!in_support(s)) return S(0);
    if (mode_ == Mode::symbolic) {
      if constexpr (std::is_same_v<S, PolyScalar>)
        return PolyScalar::symbol(s);
      else
        throw std::logic_error("a symbolic table needs polynomial scalars");
    } else {
      return S(value(s));
    }
  }

 private:
  CoefficientTable(int d, int n_o, Mode mode);
  void check_word(std::span<const int> w) const;

  int d_;
  int n_o_;
  Mode mode_;
  Support support_;
  Values alpha_;
  Values beta_;
};

/// Σ_{|w| = p} α_w L_{w_p} ... L_{w_1} (h = l) or the β / R analogue; I for p = 0.
template <ExactRing S>
BasicOperatorExpr<S> x_op(int p, Side h, const CoefficientTable& table) {
  if (p < 0) throw std::invalid_argument("x_op: p must be non-negative");
  if (p == 0) return BasicOperatorExpr<S>::identity();
  BasicOperatorExpr<S> out;
  if (p > table.n_o()) return out;
  const SymbolKind kind = h == Side::left ? SymbolKind::alpha : SymbolKind::beta;
  std::vector<int> w(p, 1);
  while (true) {
    S c = table.coefficient<S>({kind, w});
    if (!is_zero(c)) {
      typename BasicOperatorExpr<S>::Product prod;
      for (int k = p; k >= 1; --k) prod.push_back({h, w[k - 1], false});
      out.add(prod, c);
    }
    int k = p - 1;
    while (k >= 0 && w[k] == table.d()) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

/// C_{i;h} = S*_{i;h} Σ_{p=0}^{n_o} X_{p;h}: A_i for h = l, B_i for h = r.
template <ExactRing S>
BasicOperatorExpr<S> canonical_operator(int i, Side h, const CoefficientTable& table) {
  if (i < 1 || i > table.d()) throw std::invalid_argument("operator index out of range");
  BasicOperatorExpr<S> sum;
  for (int p = 0; p <= table.n_o(); ++p) sum += x_op<S>(p, h, table);
  return BasicOperatorExpr<S>::generator({h, i, true}) * sum;
}

// ---------------------------------------------------------------------------
// Bi-mixtures

/// γ̃(ω; χ), branching on h_1.
SymbolId reverse_bimixture_symbol(std::span<const int> omega, const ChiWord& chi);
/// γ(ω; χ), branching on h_n.
SymbolId bimixture_symbol(std::span<const int> omega, const ChiWord& chi);

inline PolyScalar reverse_bimixture(std::span<const int> omega, const ChiWord& chi) {
  return PolyScalar::symbol(reverse_bimixture_symbol(omega, chi));
}
inline PolyScalar bimixture(std::span<const int> omega, const ChiWord& chi) {
  return PolyScalar::symbol(bimixture_symbol(omega, chi));
}

/// Element id of C_{i;h} in moment functionals built from the Fock model.
inline int element_id(int i, Side h) { return 2 * (i - 1) + (h == Side::right); }

// ---------------------------------------------------------------------------
// Fock model: compiled operators plus the derived computations

/// Compiled canonical operators of one coefficient table. Immutable after
/// construction; the memoizing moment oracle below is not.
template <ExactRing S>
class FockModel {
 public:
  explicit FockModel(CoefficientTable table) : table_(std::move(table)) {
    for (int i = 1; i <= table_.d(); ++i)
      for (Side h : {Side::left, Side::right})
        canonical_.emplace_back(canonical_operator<S>(i, h, table_));
    for (Side h : {Side::left, Side::right})
      for (int p = 0; p <= table_.n_o(); ++p)
        x_star_.emplace_back(adjoint(x_op<S>(p, h, table_)));
  }

  const CoefficientTable& table() const { return table_; }

  const CompiledOperator<S>& canonical(int i, Side h) const {
    return canonical_.at(static_cast<std::size_t>(element_id(i, h)));
  }

  /// φ_vac(C_{ω_1;h_1} ... C_{ω_n;h_n}) by sequential application.
  S moment(std::span<const int> omega, const ChiWord& chi) const {
    detail::require_lengths(chi, omega.size());
    std::vector<const CompiledOperator<S>*> ops;
    for (int m = 1; m <= chi.size(); ++m) ops.push_back(&canonical(omega[m - 1], chi[m]));
    return vacuum_expectation<S>(std::span<const CompiledOperator<S>* const>(ops));
  }

  /// X*_{p_1;h_1} S_{i_1;h_1} ... X*_{p_n;h_n} S_{i_n;h_n} ξ_vac.
  BasicFockVector<S> lemma67_vector(const LukPath& path, const ChiWord& chi,
                                    std::span<const int> omega) const {
    detail::require_lengths(chi, omega.size());
    if (path.size() != chi.size())
      throw std::invalid_argument("path and chi word differ in length");
    BasicFockVector<S> v = BasicFockVector<S>::vacuum();
    for (int m = chi.size(); m >= 1; --m) {
      const int p = path.rise()[m - 1] + 1;
      const Side h = chi[m];
      v = apply_generator(Generator{h, omega[m - 1], false}, v);
      if (p > table_.n_o()) return {};
      v = x_star_[static_cast<std::size_t>((h == Side::right) * (table_.n_o() + 1) + p)].apply(v);
      if (v.zero()) return v;
    }
    return v;
  }

 private:
  CoefficientTable table_;
  std::vector<CompiledOperator<S>> canonical_;
  std::vector<CompiledOperator<S>> x_star_;
};

/// Blocks of a partition paired with the restricted chi words, for
/// evaluating block products over many index words.
struct RestrictedBlocks {
  RestrictedBlocks(const Partition& pi, const ChiWord& chi) {
    for (const auto& block : pi.blocks()) blocks.emplace_back(block, chi.restrict_to(block));
  }
  std::vector<std::pair<Partition::Block, ChiWord>> blocks;
};

/// Π over blocks T of the table value of symbol((ω; χ)|T).
template <ExactRing S, class SymbolFn>
S block_product(const RestrictedBlocks& rb, std::span<const int> omega,
                const CoefficientTable& table, SymbolFn symbol) {
  S product(1);
  std::vector<int> sub;
  for (const auto& [block, chi] : rb.blocks) {
    sub.clear();
    for (int m : block) sub.push_back(omega[m - 1]);
    product = product * table.coefficient<S>(symbol(std::span<const int>(sub), chi));
    if (is_zero(product)) break;
  }
  return product;
}

/// Product of γ̃ over the blocks of the output-time partition: the scalar
/// predicted for lemma67_vector.
template <ExactRing S>
S lemma67_prediction(const LukPath& path, const ChiWord& chi, std::span<const int> omega,
                     const CoefficientTable& table) {
  detail::require_lengths(chi, omega.size());
  return block_product<S>(RestrictedBlocks(output_partition(path, chi), chi), omega, table,
                          reverse_bimixture_symbol);
}

/// The blocks of every partition in P^(χ)(n).
inline std::vector<RestrictedBlocks> pchi_blocks(const ChiWord& chi) {
  std::vector<RestrictedBlocks> out;
  for (const Partition& pi : *pchi_cached(chi)) out.emplace_back(pi, chi);
  return out;
}

/// Σ_{π ∈ P^(χ)(n)} Π_{T ∈ π} γ((ω; χ)|T), evaluated on the table.
template <ExactRing S>
S moment_via_pchi(const std::vector<RestrictedBlocks>& family, std::span<const int> omega,
                  const CoefficientTable& table) {
  S total(0);
  for (const auto& rb : family)
    total = total + block_product<S>(rb, omega, table, bimixture_symbol);
  return total;
}

template <ExactRing S>
S moment_via_pchi(std::span<const int> omega, const ChiWord& chi, const CoefficientTable& table) {
  detail::require_lengths(chi, omega.size());
  return moment_via_pchi<S>(pchi_blocks(chi), omega, table);
}

/// Vacuum moments of words in the canonical operators, memoized on
/// (suffix, pruning bound). Not safe for concurrent use.
template <ExactRing S>
class CanonicalMomentOracle {
 public:
  explicit CanonicalMomentOracle(std::shared_ptr<const FockModel<S>> model)
      : model_(std::move(model)) {}

  const FockModel<S>& model() const { return *model_; }

  /// φ_vac of the product of C's named by element ids.
  S operator()(std::span<const int> elements) {
    const BasicFockVector<S>& v = suffix(elements, 0);
    return v.vacuum_coefficient();
  }

  S moment(std::span<const int> omega, const ChiWord& chi) {
    detail::require_lengths(chi, omega.size());
    std::vector<int> elements;
    for (int m = 1; m <= chi.size(); ++m) elements.push_back(element_id(omega[m - 1], chi[m]));
    return (*this)(elements);
  }

  /// A moment functional over the 2d elements C_{i;h}, for words up to
  /// max_length. It refers to this oracle, which must outlive it.
  MomentFunctional<S> functional(int max_length) {
    return MomentFunctional<S>(2 * model_->table().d(), max_length,
                               [this](std::span<const int> w) { return (*this)(w); });
  }

 private:
  // C_{e_0} ... C_{e_k} ξ_vac, keeping only words of length <= bound.
  const BasicFockVector<S>& suffix(std::span<const int> elements, int bound) {
    std::vector<int> key(elements.begin(), elements.end());
    key.push_back(-1 - bound);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BasicFockVector<S> result;
    if (elements.empty()) {
      result = BasicFockVector<S>::vacuum();
    } else {
      const int e = elements.front();
      const auto& op = model_->canonical(e / 2 + 1, e % 2 ? Side::right : Side::left);
      const BasicFockVector<S>& rest = suffix(elements.subspan(1), bound + op.max_decrease());
      result = op.apply(rest, bound);
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  std::shared_ptr<const FockModel<S>> model_;
  std::unordered_map<std::vector<int>, BasicFockVector<S>, detail::KeyHash> memo_;
};

}  // namespace lrc
