#include "lrc/deque.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <string>

namespace lrc {

namespace {

void require_same_length(const LukPath& path, const ChiWord& chi) {
  if (path.size() != chi.size())
    throw std::invalid_argument("path has length " + std::to_string(path.size()) +
                                " but chi word has length " +
                                std::to_string(chi.size()));
}

void require_enumerable(const ChiWord& chi) {
  if (chi.size() > kMaxEnumerationSize)
    throw std::invalid_argument("chi word longer than enumeration limit " +
                                std::to_string(kMaxEnumerationSize));
}

}  // namespace

DequeScenario::DequeScenario(LukPath path, ChiWord chi)
    : path_(std::move(path)), chi_(std::move(chi)) {
  require_same_length(path_, chi_);
}

ScenarioTrace simulate(const DequeScenario& s) {
  const int n = s.size();
  std::deque<int> device;
  std::vector<int> batch_of(n + 1, 0);
  std::vector<int> exit_order;
  exit_order.reserve(n);
  std::vector<int> insertion_times;
  std::map<int, std::vector<int>> batches;
  int next_ball = 1;

  for (int t = 1; t <= n; ++t) {
    const int p = s.batch_size(t);
    const Side side = s.chi()[t];
    if (next_ball + p - 1 > n)
      throw InvariantViolation("move " + std::to_string(t) +
                               " requests more balls than remain in the input");
    if (p > 0) insertion_times.push_back(t);
    for (int k = 0; k < p; ++k) {
      batch_of[next_ball] = t;
      if (side == Side::left)
        device.push_front(next_ball);
      else
        device.push_back(next_ball);
      ++next_ball;
    }
    if (device.empty())
      throw InvariantViolation("move " + std::to_string(t) +
                               " finds the deque empty");
    int ball;
    if (side == Side::left) {
      ball = device.front();
      device.pop_front();
    } else {
      ball = device.back();
      device.pop_back();
    }
    exit_order.push_back(ball);
    batches[batch_of[ball]].push_back(t);
  }
  if (!device.empty() || next_ball != n + 1)
    throw InvariantViolation("scenario did not flush every ball");

  std::vector<int> labels(n);
  for (int t = 1; t <= n; ++t) labels[t - 1] = batch_of[exit_order[t - 1]];

  ScenarioTrace trace{Partition::from_labels(labels), std::move(exit_order),
                      std::move(insertion_times), {}};
  for (auto& [time, exits] : batches) {
    if (exits.front() != time)
      throw InvariantViolation("batch inserted at " + std::to_string(time) +
                               " does not start exiting at that time");
    trace.batches.push_back(std::move(exits));
  }
  return trace;
}

Partition output_partition(const LukPath& path, const ChiWord& chi) {
  return simulate(DequeScenario(path, chi)).output_partition;
}

std::vector<Partition> pchi_by_enumeration(const ChiWord& chi) {
  require_enumerable(chi);
  std::set<Partition> seen;
  for (const LukPath& path : enumerate_luk(chi.size())) {
    Partition p = output_partition(path, chi);
    if (!seen.insert(p).second)
      throw InvariantViolation("two paths give output partition " +
                               p.to_string() + " for chi " + chi.to_string());
  }
  return {seen.begin(), seen.end()};
}

std::vector<Partition> pchi_by_sigma(const ChiWord& chi) {
  require_enumerable(chi);
  const Permutation sigma = sigma_chi(chi);
  std::vector<Partition> out;
  for (const Partition& p : enumerate_noncrossing(chi.size()))
    out.push_back(act(sigma, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::shared_ptr<const std::vector<Partition>> pchi_cached(const ChiWord& chi) {
  static std::mutex mutex;
  static std::map<ChiWord, std::shared_ptr<const std::vector<Partition>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(chi); it != cache.end()) return it->second;
  }
  auto computed =
      std::make_shared<const std::vector<Partition>>(pchi_by_enumeration(chi));
  std::lock_guard lock(mutex);
  return cache.emplace(chi, std::move(computed)).first->second;
}

Permutation sigma_chi(const ChiWord& chi) {
  std::vector<int> images = chi.left_positions();
  const std::vector<int> right = chi.right_positions();
  images.insert(images.end(), right.rbegin(), right.rend());
  return Permutation(std::move(images));
}

Permutation tau_u(int n, int u) {
  if (n < 1 || u < 0 || u > n)
    throw std::invalid_argument("tau_u requires n >= 1 and 0 <= u <= n");
  std::vector<int> images(n);
  for (int q = 1; q <= n; ++q) images[q - 1] = q <= u ? u + 1 - q : n + u + 1 - q;
  return Permutation(std::move(images));
}

namespace {

// Partition of {1..k} grouping q by the output block containing pos[q-1].
std::optional<Partition> pull_back(const std::vector<int>& pos,
                                   const std::vector<int>& block_of) {
  if (pos.empty()) return std::nullopt;
  std::vector<int> labels;
  labels.reserve(pos.size());
  for (int m : pos) labels.push_back(block_of[m - 1]);
  return Partition::from_labels(labels);
}

}  // namespace

StandingsPartitions standings_partitions(const LukPath& path, const ChiWord& chi) {
  const std::vector<int> block_of = output_partition(path, chi).labels();
  return {pull_back(chi.left_positions(), block_of),
          pull_back(chi.right_positions(), block_of)};
}

std::vector<CombinedBlock> combined_standings_blocks(const LukPath& path,
                                                     const ChiWord& chi) {
  const ScenarioTrace trace = simulate(DequeScenario(path, chi));
  const int n = chi.size();
  const std::vector<int> block_of = trace.output_partition.labels();
  const std::vector<int> left = chi.left_positions();
  const std::vector<int> right = chi.right_positions();

  // Output blocks are ordered by minimum, and min(T_i) = i, so block k
  // belongs to the k-th insertion time.
  std::vector<CombinedBlock> out;
  for (int t : trace.insertion_times) out.push_back({t, {}});
  for (std::size_t q = 0; q < left.size(); ++q)
    out[block_of[left[q] - 1]].elements.push_back(static_cast<int>(q) + 1);
  for (std::size_t q = 0; q < right.size(); ++q)
    out[block_of[right[q] - 1]].elements.push_back(n - static_cast<int>(q));
  for (auto& b : out) std::sort(b.elements.begin(), b.elements.end());
  return out;
}

Partition combined_standings(const LukPath& path, const ChiWord& chi) {
  std::vector<Partition::Block> blocks;
  for (auto& b : combined_standings_blocks(path, chi))
    blocks.push_back(std::move(b.elements));
  return Partition(chi.size(), std::move(blocks));
}

}  // namespace lrc
