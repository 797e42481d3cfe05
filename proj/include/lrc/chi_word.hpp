#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lrc {

/// Which face an operator (or a deque move) acts on.
enum class Side : unsigned char { left, right };

inline char to_char(Side s) { return s == Side::left ? 'l' : 'r'; }

/// Word in {l, r}^n. Positions are 1-based.
class ChiWord {
 public:
  /// Throws std::invalid_argument if `letters` is empty.
  explicit ChiWord(std::vector<Side> letters);

  /// Parses a string over {'l','r'}; throws std::invalid_argument otherwise.
  static ChiWord parse(std::string_view text);
  static ChiWord constant(int n, Side s);

  int size() const { return static_cast<int>(letters_.size()); }
  Side operator[](int m) const { return letters_[m - 1]; }
  const std::vector<Side>& letters() const { return letters_; }

  /// m_l(1) < ... < m_l(u): positions holding 'l'.
  std::vector<int> left_positions() const;
  /// m_r(1) < ... < m_r(v): positions holding 'r'.
  std::vector<int> right_positions() const;
  int left_count() const;
  int right_count() const { return size() - left_count(); }

  /// The subword at the given ascending 1-based positions.
  ChiWord restrict_to(std::span<const int> positions) const;

  std::string to_string() const;

  friend bool operator==(const ChiWord&, const ChiWord&) = default;
  friend auto operator<=>(const ChiWord&, const ChiWord&) = default;

 private:
  std::vector<Side> letters_;
};

/// The reversed word (h_n, ..., h_1).
ChiWord chi_opposite(const ChiWord& chi);

/// All 2^n words of length n, in lexicographic order with l < r.
std::vector<ChiWord> enumerate_chi_words(int n);

}  // namespace lrc
