#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lrc/fock.hpp"
#include "lrc/lukasiewicz.hpp"
#include "lrc/partition.hpp"
#include "lrc/poly.hpp"

namespace lrc {

/// A file could not be read or did not contain what was expected.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const LukPath& path);
/// [{"coeff": "p/q", "monomial": ["a[1,2]", ...]}, ...] in monomial order.
nlohmann::json to_json(const PolyScalar& p);
nlohmann::json to_json(const CoefficientTable& t);

PolyScalar poly_from_json(const nlohmann::json& j);

/// {"d", "n_o", "alpha": {"1,2": "3/4"}, "beta": {...}, "mode"?}. Without
/// "mode", the table is symbolic exactly when both maps are absent.
/// Throws std::invalid_argument on malformed content.
CoefficientTable table_from_json(const nlohmann::json& j);

/// Reads and parses a table file; every failure is reported as IoError
/// naming the path.
CoefficientTable load_table(const std::filesystem::path& path);

/// "1,2" <-> {1, 2}.
std::string index_word_key(std::span<const int> w);
std::vector<int> parse_index_word(std::string_view text);

}  // namespace lrc
