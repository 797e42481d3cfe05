#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lrc/chi_word.hpp"
#include "lrc/lukasiewicz.hpp"
#include "lrc/partition.hpp"

namespace lrc {

/// Signals a broken internal invariant, i.e. a bug rather than bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A path and a chi word of equal length. Move i inserts p_i = rise_i + 1
/// balls on side chi[i], then emits one ball from that side.
class DequeScenario {
 public:
  /// Throws std::invalid_argument on a length mismatch.
  DequeScenario(LukPath path, ChiWord chi);

  int size() const { return path_.size(); }
  const LukPath& path() const { return path_; }
  const ChiWord& chi() const { return chi_; }
  int batch_size(int i) const { return path_.rise()[i - 1] + 1; }

 private:
  LukPath path_;
  ChiWord chi_;
};

struct ScenarioTrace {
  /// Exit times grouped by the move in which the balls were inserted.
  Partition output_partition;
  /// exit_order[t-1] is the ball that reached the output pipe at time t.
  std::vector<int> exit_order;
  /// Moves with p_i > 0, ascending.
  std::vector<int> insertion_times;
  /// batches[k] = T_i for i = insertion_times[k], ascending.
  std::vector<std::vector<int>> batches;
};

/// Replays the moves literally on a double-ended queue of ball labels.
ScenarioTrace simulate(const DequeScenario& s);

Partition output_partition(const LukPath& path, const ChiWord& chi);

/// {output_partition(λ, χ) : λ ∈ Luk(n)}, sorted. Throws InvariantViolation
/// if two paths produce the same partition.
std::vector<Partition> pchi_by_enumeration(const ChiWord& chi);

/// {σ_χ · π : π ∈ NC(n)}, sorted.
std::vector<Partition> pchi_by_sigma(const ChiWord& chi);

/// Shared, memoized copy of pchi_by_enumeration. Safe to call concurrently.
std::shared_ptr<const std::vector<Partition>> pchi_cached(const ChiWord& chi);

/// Sends 1..u to the 'l' positions in increasing order and u+1..n to the
/// 'r' positions in decreasing order.
Permutation sigma_chi(const ChiWord& chi);

/// q -> u+1-q for q <= u, q -> n+u+1-q for q > u.
Permutation tau_u(int n, int u);

struct StandingsPartitions {
  std::optional<Partition> left;   // absent when chi has no 'l'
  std::optional<Partition> right;  // absent when chi has no 'r'
};

StandingsPartitions standings_partitions(const LukPath& path, const ChiWord& chi);

struct CombinedBlock {
  int insertion_time;
  std::vector<int> elements;  // V_i ∪ ((n+1) − W_i), ascending
};

/// Blocks of the combined-standings partition keyed by insertion time.
std::vector<CombinedBlock> combined_standings_blocks(const LukPath& path,
                                                     const ChiWord& chi);

Partition combined_standings(const LukPath& path, const ChiWord& chi);

}  // namespace lrc
