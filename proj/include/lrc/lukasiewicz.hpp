#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lrc/partition.hpp"

namespace lrc {

/// Raised when an integer vector is not the rise-vector of a Lukasiewicz path.
class NotAPathError : public std::invalid_argument {
 public:
  NotAPathError(const std::string& what, std::optional<int> prefix)
      : std::invalid_argument(what), prefix_(prefix) {}

  /// Length of the first prefix with a negative sum, when that was the cause.
  std::optional<int> failing_prefix() const { return prefix_; }

 private:
  std::optional<int> prefix_;
};

/// Lukasiewicz path stored as its rise-vector (q_1..q_n): every q_m >= -1,
/// every partial sum >= 0, total sum 0.
class LukPath {
 public:
  int size() const { return static_cast<int>(rise_.size()); }
  const std::vector<int>& rise() const { return rise_; }

  /// Heights j_1..j_n of the lattice points (m, j_m).
  std::vector<int> heights() const;

  std::string to_string() const;

  friend bool operator==(const LukPath&, const LukPath&) = default;
  friend auto operator<=>(const LukPath&, const LukPath&) = default;

 private:
  friend LukPath validate_rise(std::span<const int>);
  explicit LukPath(std::vector<int> rise) : rise_(std::move(rise)) {}

  std::vector<int> rise_;
};

/// Throws NotAPathError when a partial sum goes negative, the total is
/// nonzero, an entry is below -1, or the vector is empty.
LukPath validate_rise(std::span<const int> rise);

std::vector<LukPath> enumerate_luk(int n);

/// Rise-vector with |V|-1 at each block minimum and -1 elsewhere.
LukPath psi(const Partition& p);

/// The non-crossing partition mapped to `path` by psi, obtained by running
/// the balls through a last-in-first-out stack.
Partition phi(const LukPath& path);

}  // namespace lrc
