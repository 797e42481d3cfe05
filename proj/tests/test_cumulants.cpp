#include <thread>

#include "doctest.h"
#include "lrc/cumulants.hpp"
#include "lrc/fock.hpp"
#include "support.hpp"

using namespace lrc;

namespace {

using Word = std::vector<int>;

ChiWord word(const char* s) { return ChiWord::parse(s); }

// Every word of length 1..max_length over `elements` letters.
std::vector<Word> all_words(int elements, int max_length) {
  std::vector<Word> out;
  for (int n = 1; n <= max_length; ++n) {
    Word w(n, 0);
    while (true) {
      out.push_back(w);
      int k = n - 1;
      while (k >= 0 && w[k] == elements - 1) w[k--] = 0;
      if (k < 0) break;
      ++w[k];
    }
  }
  return out;
}

// A functional whose values are drawn up front from a seeded generator.
MomentFunctional<Rational> random_functional(int elements, int max_length, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  auto values = std::make_shared<std::map<Word, Rational>>();
  for (const Word& w : all_words(elements, max_length))
    (*values)[w] = lrc::test::small_rational(gen);
  return MomentFunctional<Rational>(elements, max_length, [values](std::span<const int> w) {
    return values->at(Word(w.begin(), w.end()));
  });
}

// φ(w) is the formal symbol a[w_1+1, ..., w_n+1].
MomentFunctional<PolyScalar> formal_functional(int elements, int max_length) {
  return MomentFunctional<PolyScalar>(elements, max_length, [](std::span<const int> w) {
    Word shifted;
    for (int a : w) shifted.push_back(a + 1);
    return PolyScalar::alpha(shifted);
  });
}

Rational substitute(const PolyScalar& p, const MomentFunctional<Rational>& phi) {
  Rational total = 0;
  for (const auto& [monomial, c] : p.terms()) {
    Rational term = c;
    for (const SymbolId& s : monomial) {
      Word w;
      for (int i : s.word) w.push_back(i - 1);
      term *= phi(w);
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST_SUITE("cumulants") {
  TEST_CASE("MomentFunctional validates words") {
    const auto phi = random_functional(2, 3, 0);
    CHECK_THROWS_AS(phi(Word{}), std::invalid_argument);
    CHECK_THROWS_AS(phi(Word{0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(phi(Word{2}), std::invalid_argument);
    CHECK_THROWS_AS(MomentFunctional<Rational>(0, 1, {}), std::invalid_argument);
  }

  TEST_CASE("lr_cumulant: n = 1 is the moment") {
    const auto phi = random_functional(3, 1, 1);
    for (int a = 0; a < 3; ++a)
      for (const char* chi : {"l", "r"}) CHECK(lr_cumulant(word(chi), Word{a}, phi) == phi(Word{a}));
  }

  TEST_CASE("lr_cumulant: n <= 3 agrees with the free cumulant") {
    const auto phi = random_functional(3, 3, 2);
    for (const Word& w : all_words(3, 3)) {
      const Rational expected = free_cumulant(w, phi);
      for (const auto& chi : enumerate_chi_words(static_cast<int>(w.size())))
        CHECK(lr_cumulant(chi, w, phi) == expected);
    }
  }

  TEST_CASE("lr_cumulant: the lrlr correction terms") {
    for (std::uint64_t seed : {3u, 4u, 5u}) {
      const auto phi = random_functional(4, 4, seed);
      const Word a{0, 1, 2, 3};
      auto k2 = [&](int x, int y) { return free_cumulant(Word{a[x - 1], a[y - 1]}, phi); };
      const Rational expected = free_cumulant(a, phi) + k2(1, 4) * k2(2, 3) - k2(1, 3) * k2(2, 4);
      CHECK(lr_cumulant(word("lrlr"), a, phi) == expected);
    }
  }

  TEST_CASE("lr_cumulant errors") {
    const auto phi = random_functional(2, 3, 6);
    CHECK_THROWS_AS(lr_cumulant(word("lr"), Word{0, 1, 0}, phi), std::invalid_argument);
    CumulantEvaluator<Rational> eval(phi);
    CHECK_THROWS_AS(eval(word("lll"), Word{0, 1}), std::invalid_argument);
  }

  TEST_CASE("moment_from_cumulants examples") {
    const auto phi = random_functional(2, 2, 7);
    CumulantEvaluator<Rational> eval(phi);
    auto kappa = [&](const ChiWord& c, std::span<const int> w) { return eval(c, w); };
    for (const char* chi : {"l", "r"})
      CHECK(moment_from_cumulants<Rational>(word(chi), Word{1}, kappa) == eval(word(chi), Word{1}));
    CHECK_THROWS_AS(moment_from_cumulants<Rational>(word("lr"), Word{1}, kappa),
                    std::invalid_argument);
  }

  TEST_CASE("free_cumulant examples") {
    const auto phi = random_functional(3, 2, 8);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(free_cumulant(Word{a, b}, phi) == phi(Word{a, b}) - phi(Word{a}) * phi(Word{b}));
    CHECK_THROWS_AS(free_cumulant(Word{}, phi), std::invalid_argument);
  }

  TEST_CASE("bifree examples") {
    const auto rphi = random_functional(2, 3, 9);
    const auto single = is_combinatorially_bifree_upto<Rational>({{0, 1}}, rphi, 3);
    CHECK(single.holds);
    CHECK(single.checked == 0);
    CHECK_THROWS_AS(is_combinatorially_bifree_upto<Rational>({{0, 1}}, rphi, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_combinatorially_bifree_upto<Rational>({}, rphi, 2), std::invalid_argument);

    const std::vector<std::pair<int, int>> pairs{
        {element_id(1, Side::left), element_id(1, Side::right)},
        {element_id(2, Side::left), element_id(2, Side::right)}};

    CanonicalMomentOracle<PolyScalar> separated(
        std::make_shared<const FockModel<PolyScalar>>(CoefficientTable::separated(2, 4)));
    const auto sep_report = is_combinatorially_bifree_upto(pairs, separated.functional(4), 4);
    CHECK(sep_report.holds);
    CHECK(sep_report.checked > 0);
    CHECK(sep_report.violations.empty());

    // Constant words plus the single mixed coefficient α_(1,2).
    auto support = [](SymbolKind kind, std::span<const int> w) {
      const bool constant =
          std::all_of(w.begin(), w.end(), [&](int i) { return i == w.front(); });
      return constant || (kind == SymbolKind::alpha && Word(w.begin(), w.end()) == Word{1, 2});
    };
    CanonicalMomentOracle<PolyScalar> injected(std::make_shared<const FockModel<PolyScalar>>(
        CoefficientTable::symbolic(2, 2, support)));
    const auto report = is_combinatorially_bifree_upto(pairs, injected.functional(2), 2);
    CHECK_FALSE(report.holds);
    const auto a12 = PolyScalar::alpha({1, 2});
    bool witnessed = false;
    for (const auto& v : report.violations) {
      CHECK(v.value == a12);
      witnessed = witnessed || (v.chi == word("ll") && v.indices == Word{1, 2});
    }
    CHECK(witnessed);
  }
}

TEST_SUITE("cumulants properties") {
  TEST_CASE("moments are recovered from cumulants, all chi, n <= 5") {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
      const auto phi = random_functional(2, 5, seed);
      CumulantEvaluator<Rational> eval(phi);
      auto kappa = [&](const ChiWord& c, std::span<const int> w) { return eval(c, w); };
      for (const Word& w : all_words(2, 5))
        for (const auto& chi : enumerate_chi_words(static_cast<int>(w.size())))
          CHECK(moment_from_cumulants<Rational>(chi, w, kappa) == phi(w));
    }
  }

  TEST_CASE("all-left and all-right cumulants agree, n <= 5") {
    for (std::uint64_t seed : {10u, 11u}) {
      const auto phi = random_functional(3, 5, seed);
      CumulantEvaluator<Rational> eval(phi);
      for (const Word& w : all_words(3, 5)) {
        const int n = static_cast<int>(w.size());
        CHECK(eval(ChiWord::constant(n, Side::left), w) ==
              eval(ChiWord::constant(n, Side::right), w));
      }
    }
  }

  TEST_CASE("cumulants do not depend on chi for n <= 3") {
    for (std::uint64_t seed : {12u, 13u, 14u}) {
      const auto phi = random_functional(3, 3, seed);
      CumulantEvaluator<Rational> eval(phi);
      for (const Word& w : all_words(3, 3)) {
        const int n = static_cast<int>(w.size());
        const Rational first = eval(ChiWord::constant(n, Side::left), w);
        for (const auto& chi : enumerate_chi_words(n)) CHECK(eval(chi, w) == first);
      }
    }
  }

  TEST_CASE("cumulants are fixed polynomials in the moments, n <= 4") {
    const auto formal = formal_functional(2, 4);
    CumulantEvaluator<PolyScalar> symbolic(formal);
    std::vector<MomentFunctional<Rational>> samples;
    for (std::uint64_t seed : {20u, 21u}) samples.push_back(random_functional(2, 4, seed));
    for (const Word& w : all_words(2, 4))
      for (const auto& chi : enumerate_chi_words(static_cast<int>(w.size()))) {
        const PolyScalar k = symbolic(chi, w);
        for (const auto& [monomial, c] : k.terms()) {
          std::size_t total = 0;
          std::map<int, int> letters;
          for (const SymbolId& s : monomial) {
            total += s.word.size();
            for (int i : s.word) ++letters[i - 1];
          }
          CHECK(total == w.size());
          std::map<int, int> expected;
          for (int a : w) ++expected[a];
          CHECK(letters == expected);
        }
        for (const auto& phi : samples) CHECK(substitute(k, phi) == lr_cumulant(chi, w, phi));
      }
  }

  TEST_CASE("concurrent evaluation over one functional gives identical results") {
    const auto phi = random_functional(2, 5, 30);
    std::vector<std::pair<ChiWord, Word>> jobs;
    for (const Word& w : all_words(2, 5))
      for (const auto& chi : enumerate_chi_words(static_cast<int>(w.size())))
        jobs.emplace_back(chi, w);
    std::vector<std::vector<Rational>> results(4);
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
      threads.emplace_back([&, t] {
        CumulantEvaluator<Rational> eval(phi);
        for (const auto& [chi, w] : jobs) results[t].push_back(eval(chi, w));
      });
    for (auto& th : threads) th.join();
    REQUIRE(results[0].size() == jobs.size());
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
    for (std::size_t k = 0; k < jobs.size(); k += 37)
      CHECK(results[0][k] == lr_cumulant(jobs[k].first, jobs[k].second, phi));
  }
}
