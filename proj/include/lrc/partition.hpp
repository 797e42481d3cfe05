#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lrc/scalar.hpp"

namespace lrc {

/// Largest ground-set size accepted by the exhaustive enumerators.
inline constexpr int kMaxEnumerationSize = 10;

/// Set partition of {1..n}, held in canonical form: blocks sorted by their
/// minimum, elements ascending inside each block. Equality is structural.
class Partition {
 public:
  using Block = std::vector<int>;

  /// Validates that `blocks` partition {1..n} and canonicalizes them.
  /// Throws std::invalid_argument otherwise (including n < 1).
  Partition(int n, std::vector<Block> blocks);

  /// 0_n, all singletons.
  static Partition singletons(int n);
  /// 1_n, one block.
  static Partition single_block(int n);
  /// Builds the partition whose block of m is identified by labels[m-1].
  static Partition from_labels(std::span<const int> labels);

  int size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }

  /// labels()[m-1] is the index (into blocks()) of the block containing m.
  std::vector<int> labels() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  struct Canonical {};
  Partition(Canonical, int n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)) {}

  int n_;
  std::vector<Block> blocks_;
};

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The order-reversing permutation m -> n+1-m.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int m) const { return images_[m - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (s∘t)(m) = s(t(m)).
Permutation compose(const Permutation& s, const Permutation& t);

std::vector<Partition> enumerate_partitions(int n);
std::vector<Partition> enumerate_noncrossing(int n);

bool is_noncrossing(const Partition& p);

/// Reverse refinement order: every block of p sits inside a block of q.
bool leq(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);

/// t·p = { t(V) : V in p }.
Partition act(const Permutation& t, const Partition& p);
Partition opposite(const Partition& p);

BigInt bell_number(int n);
BigInt catalan_number(int n);

}  // namespace lrc
