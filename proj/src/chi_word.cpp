#include "lrc/chi_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

ChiWord::ChiWord(std::vector<Side> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("ChiWord: empty word");
}

ChiWord ChiWord::parse(std::string_view text) {
  std::vector<Side> letters;
  for (char c : text) {
    if (c == 'l')
      letters.push_back(Side::left);
    else if (c == 'r')
      letters.push_back(Side::right);
    else
      throw std::invalid_argument("chi word \"" + std::string(text) +
                                  "\" contains '" + std::string(1, c) +
                                  "'; only 'l' and 'r' are allowed");
  }
  if (letters.empty()) throw std::invalid_argument("chi word is empty");
  return ChiWord(std::move(letters));
}

ChiWord ChiWord::constant(int n, Side s) {
  if (n < 1) throw std::invalid_argument("ChiWord: n must be >= 1");
  return ChiWord(std::vector<Side>(n, s));
}

std::vector<int> ChiWord::left_positions() const {
  std::vector<int> out;
  for (int m = 1; m <= size(); ++m)
    if (letters_[m - 1] == Side::left) out.push_back(m);
  return out;
}

std::vector<int> ChiWord::right_positions() const {
  std::vector<int> out;
  for (int m = 1; m <= size(); ++m)
    if (letters_[m - 1] == Side::right) out.push_back(m);
  return out;
}

int ChiWord::left_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), Side::left));
}

ChiWord ChiWord::restrict_to(std::span<const int> positions) const {
  std::vector<Side> sub;
  sub.reserve(positions.size());
  for (int m : positions) sub.push_back(letters_.at(m - 1));
  return ChiWord(std::move(sub));
}

std::string ChiWord::to_string() const {
  std::string out;
  for (Side s : letters_) out += to_char(s);
  return out;
}

ChiWord chi_opposite(const ChiWord& chi) {
  return ChiWord(std::vector<Side>(chi.letters().rbegin(), chi.letters().rend()));
}

std::vector<ChiWord> enumerate_chi_words(int n) {
  if (n < 1 || n > 20)
    throw std::invalid_argument("enumerate_chi_words: n out of range");
  std::vector<ChiWord> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Side> letters(n);
    for (int k = 0; k < n; ++k)
      letters[k] = (mask >> (n - 1 - k)) & 1u ? Side::right : Side::left;
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace lrc
