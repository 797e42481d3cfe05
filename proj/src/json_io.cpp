#include "lrc/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lrc {

using nlohmann::json;

json to_json(const Partition& p) { return p.blocks(); }
json to_json(const Permutation& p) { return p.images(); }
json to_json(const LukPath& path) { return path.rise(); }

json to_json(const PolyScalar& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::array();
    for (const auto& s : m) mono.push_back(s.to_string());
    out.push_back({{"coeff", to_string(c)}, {"monomial", std::move(mono)}});
  }
  return out;
}

PolyScalar poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  PolyScalar out;
  for (const auto& term : j) {
    PolyScalar t(parse_rational(term.at("coeff").get<std::string>()));
    for (const auto& s : term.at("monomial"))
      t *= PolyScalar::symbol(SymbolId::parse(s.get<std::string>()));
    out += t;
  }
  return out;
}

std::string index_word_key(std::span<const int> w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

std::vector<int> parse_index_word(std::string_view text) {
  std::vector<int> out;
  std::string_view rest = text;
  while (true) {
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || value < 1)
      throw std::invalid_argument("malformed index word \"" + std::string(text) + "\"");
    out.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.empty()) break;
    if (rest.front() != ',')
      throw std::invalid_argument("malformed index word \"" + std::string(text) + "\"");
    rest.remove_prefix(1);
  }
  return out;
}

json to_json(const CoefficientTable& t) {
  json out{{"d", t.d()}, {"n_o", t.n_o()}};
  if (t.mode() == CoefficientTable::Mode::symbolic) {
    out["mode"] = "symbolic";
    return out;
  }
  out["mode"] = "concrete";
  for (const auto& [name, values] :
       {std::pair{"alpha", &t.alpha_values()}, std::pair{"beta", &t.beta_values()}}) {
    json m = json::object();
    for (const auto& [w, c] : *values) m[index_word_key(w)] = to_string(c);
    out[name] = std::move(m);
  }
  return out;
}

CoefficientTable table_from_json(const json& j) {
  try {
    const int d = j.at("d").get<int>();
    const int n_o = j.at("n_o").get<int>();
    bool symbolic = !j.contains("alpha") && !j.contains("beta");
    if (j.contains("mode")) {
      const auto mode = j.at("mode").get<std::string>();
      if (mode != "symbolic" && mode != "concrete")
        throw std::invalid_argument("mode must be \"symbolic\" or \"concrete\"");
      symbolic = mode == "symbolic";
    }
    if (symbolic) {
      if (j.contains("alpha") || j.contains("beta"))
        throw std::invalid_argument("symbolic table must not list coefficients");
      return CoefficientTable::symbolic(d, n_o);
    }
    CoefficientTable::Values maps[2];
    const char* names[2] = {"alpha", "beta"};
    for (int k = 0; k < 2; ++k) {
      if (!j.contains(names[k])) continue;
      const json& m = j.at(names[k]);
      if (!m.is_object())
        throw std::invalid_argument(std::string(names[k]) + " must be an object");
      for (const auto& [key, value] : m.items()) {
        Rational r = value.is_number_integer() ? Rational(value.get<long>())
                                               : parse_rational(value.get<std::string>());
        maps[k][parse_index_word(key)] = r;
      }
    }
    return CoefficientTable::concrete(d, n_o, std::move(maps[0]), std::move(maps[1]));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed coefficient table: ") + e.what());
  }
}

CoefficientTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return table_from_json(json::parse(buffer.str()));
  } catch (const json::exception& e) {
    throw IoError("table file " + path.string() + " is not valid JSON: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError("table file " + path.string() + ": " + e.what());
  }
}

}  // namespace lrc
