#include "lrc/lukasiewicz.hpp"

#include <algorithm>

namespace lrc {

namespace {

std::string join(std::span<const int> xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out + "]";
}

void extend(int n, int height, std::vector<int>& rise,
            std::vector<LukPath>& out) {
  const int m = static_cast<int>(rise.size());
  if (m == n) {
    out.push_back(validate_rise(rise));
    return;
  }
  // After this step, n-m-1 steps remain and each can descend by at most one.
  const int remaining = n - m - 1;
  for (int q = -1; height + q <= remaining; ++q) {
    if (height + q < 0) continue;
    rise.push_back(q);
    extend(n, height + q, rise, out);
    rise.pop_back();
  }
}

}  // namespace

std::vector<int> LukPath::heights() const {
  std::vector<int> h;
  int j = 0;
  for (int q : rise_) h.push_back(j += q);
  return h;
}

std::string LukPath::to_string() const { return join(rise_); }

LukPath validate_rise(std::span<const int> rise) {
  if (rise.empty()) throw NotAPathError("rise-vector is empty", std::nullopt);
  int sum = 0;
  for (std::size_t m = 0; m < rise.size(); ++m) {
    if (rise[m] < -1)
      throw NotAPathError("rise-vector " + join(rise) + ": entry " +
                              std::to_string(m + 1) + " is below -1",
                          std::nullopt);
    sum += rise[m];
    if (sum < 0)
      throw NotAPathError("rise-vector " + join(rise) + ": prefix of length " +
                              std::to_string(m + 1) + " has negative sum",
                          static_cast<int>(m + 1));
  }
  if (sum != 0)
    throw NotAPathError("rise-vector " + join(rise) + ": total sum is " +
                            std::to_string(sum) + ", expected 0",
                        std::nullopt);
  return LukPath(std::vector<int>(rise.begin(), rise.end()));
}

std::vector<LukPath> enumerate_luk(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration size must be in 1.." +
                                std::to_string(kMaxEnumerationSize) +
                                ", got " + std::to_string(n));
  std::vector<LukPath> out;
  std::vector<int> rise;
  extend(n, 0, rise, out);
  return out;
}

LukPath psi(const Partition& p) {
  std::vector<int> rise(p.size(), -1);
  for (const auto& block : p.blocks())
    rise[block.front() - 1] = static_cast<int>(block.size()) - 1;
  return validate_rise(rise);
}

Partition phi(const LukPath& path) {
  const int n = path.size();
  std::vector<int> stack;            // ball labels, top at the back
  std::vector<int> batch_of(n + 1);  // insertion time of each ball
  std::vector<int> labels(n);        // exit time -> insertion time
  int next_ball = 1;
  for (int t = 1; t <= n; ++t) {
    const int p = path.rise()[t - 1] + 1;
    for (int k = 0; k < p; ++k) {
      batch_of[next_ball] = t;
      stack.push_back(next_ball++);
    }
    labels[t - 1] = batch_of[stack.back()];
    stack.pop_back();
  }
  return Partition::from_labels(labels);
}

}  // namespace lrc
