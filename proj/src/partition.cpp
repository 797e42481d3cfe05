#include "lrc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrc {

namespace {

void check_size(int n, const char* what) {
  if (n < 1)
    throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void check_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration size must be in 1.." +
                                std::to_string(kMaxEnumerationSize) +
                                ", got " + std::to_string(n));
}

void check_same_size(int a, int b) {
  if (a != b)
    throw std::invalid_argument("ground-set sizes differ: " +
                                std::to_string(a) + " vs " + std::to_string(b));
}

std::string join(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out + "]";
}

}  // namespace

Partition::Partition(int n, std::vector<Block> blocks) : n_(n) {
  check_size(n, "Partition");
  std::vector<char> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("Partition: empty block");
    std::sort(b.begin(), b.end());
    for (int m : b) {
      if (m < 1 || m > n)
        throw std::invalid_argument("Partition: element " + std::to_string(m) +
                                    " outside 1.." + std::to_string(n));
      if (seen[m])
        throw std::invalid_argument("Partition: element " + std::to_string(m) +
                                    " appears twice");
      seen[m] = 1;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) != n)
    throw std::invalid_argument("Partition: blocks do not cover 1.." +
                                std::to_string(n));
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
}

Partition Partition::singletons(int n) {
  check_size(n, "singletons");
  std::vector<Block> blocks;
  for (int m = 1; m <= n; ++m) blocks.push_back({m});
  return Partition(Canonical{}, n, std::move(blocks));
}

Partition Partition::single_block(int n) {
  check_size(n, "single_block");
  Block all(n);
  std::iota(all.begin(), all.end(), 1);
  return Partition(Canonical{}, n, {std::move(all)});
}

Partition Partition::from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  check_size(n, "from_labels");
  // Blocks are emitted in order of first appearance, which is the order of
  // their minima, so the result is already canonical.
  std::vector<Block> blocks;
  std::vector<std::pair<int, int>> label_to_block;
  for (int m = 1; m <= n; ++m) {
    const int lab = labels[m - 1];
    auto it = std::find_if(label_to_block.begin(), label_to_block.end(),
                           [lab](const auto& e) { return e.first == lab; });
    if (it == label_to_block.end()) {
      label_to_block.emplace_back(lab, static_cast<int>(blocks.size()));
      blocks.push_back({m});
    } else {
      blocks[it->second].push_back(m);
    }
  }
  return Partition(Canonical{}, n, std::move(blocks));
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int m : blocks_[b]) out[m - 1] = static_cast<int>(b);
  return out;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ',';
    out += join(blocks_[b]);
  }
  return out + "]";
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  check_size(n, "Permutation");
  std::vector<char> seen(n + 1, 0);
  for (int x : images_) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("Permutation: " + join(images_) +
                                  " is not a bijection of 1.." +
                                  std::to_string(n));
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  check_size(n, "identity");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int n) {
  check_size(n, "reversal");
  std::vector<int> im(n);
  for (int m = 1; m <= n; ++m) im[m - 1] = n + 1 - m;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int m = 1; m <= size(); ++m) inv[images_[m - 1] - 1] = m;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const { return join(images_); }

Permutation compose(const Permutation& s, const Permutation& t) {
  check_same_size(s.size(), t.size());
  std::vector<int> im(s.size());
  for (int m = 1; m <= s.size(); ++m) im[m - 1] = s(t(m));
  return Permutation(std::move(im));
}

std::vector<Partition> enumerate_partitions(int n) {
  check_enumerable(n);
  // Restricted growth strings: labels[0] = 0, labels[k] <= 1 + max(prefix).
  std::vector<Partition> out;
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(labels));
    int k = n - 1;
    while (k > 0 && labels[k] == prefix_max[k - 1] + 1) --k;
    if (k == 0) break;
    ++labels[k];
    prefix_max[k] = std::max(prefix_max[k - 1], labels[k]);
    for (int j = k + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[k];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_noncrossing(int n) {
  auto all = enumerate_partitions(n);
  std::erase_if(all, [](const Partition& p) { return !is_noncrossing(p); });
  return all;
}

bool is_noncrossing(const Partition& p) {
  // Scan left to right keeping a stack of blocks that are open (started but
  // not finished). A non-first element must belong to the block on top.
  const auto labels = p.labels();
  const auto& blocks = p.blocks();
  std::vector<int> open;
  for (int m = 1; m <= p.size(); ++m) {
    const int b = labels[m - 1];
    const bool first = blocks[b].front() == m;
    const bool last = blocks[b].back() == m;
    if (first) {
      if (!last) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (last) open.pop_back();
  }
  return true;
}

bool leq(const Partition& p, const Partition& q) {
  check_same_size(p.size(), q.size());
  const auto qlab = q.labels();
  for (const auto& block : p.blocks()) {
    const int target = qlab[block.front() - 1];
    for (int m : block)
      if (qlab[m - 1] != target) return false;
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  check_same_size(p.size(), q.size());
  const auto plab = p.labels();
  const auto qlab = q.labels();
  const int width = static_cast<int>(q.block_count());
  std::vector<int> labels(p.size());
  for (int m = 0; m < p.size(); ++m) labels[m] = plab[m] * width + qlab[m];
  return Partition::from_labels(labels);
}

Partition act(const Permutation& t, const Partition& p) {
  check_same_size(t.size(), p.size());
  std::vector<Partition::Block> blocks;
  blocks.reserve(p.block_count());
  for (const auto& block : p.blocks()) {
    Partition::Block image;
    image.reserve(block.size());
    for (int m : block) image.push_back(t(m));
    blocks.push_back(std::move(image));
  }
  return Partition(p.size(), std::move(blocks));
}

Partition opposite(const Partition& p) {
  return act(Permutation::reversal(p.size()), p);
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be >= 0");
  // Bell triangle.
  std::vector<BigInt> row{BigInt(1)};
  for (int k = 0; k < n; ++k) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

BigInt catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number: n must be >= 0");
  BigInt c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace lrc
