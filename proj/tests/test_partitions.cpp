#include "doctest.h"
#include "lrc/partition.hpp"
#include "support.hpp"

using namespace lrc;
using lrc::test::P;

TEST_SUITE("partitions") {
  TEST_CASE("construction canonicalizes and validates") {
    const Partition p(5, {{5, 3}, {4, 2, 1}});
    CHECK(p.to_string() == "[[1,2,4],[3,5]]");
    CHECK(p == P(5, {{1, 2, 4}, {3, 5}}));
    CHECK_THROWS_AS(Partition(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{1, 2, 3}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(3, {{1, 2, 4}}), std::invalid_argument);
  }

  TEST_CASE("from_labels and labels are inverse") {
    const std::vector<int> labels{7, 7, 3, 7, 3};
    const Partition p = Partition::from_labels(labels);
    CHECK(p == P(5, {{1, 2, 4}, {3, 5}}));
    CHECK(p.labels() == std::vector<int>{0, 0, 1, 0, 1});
  }

  TEST_CASE("enumerate_partitions examples") {
    const auto one = enumerate_partitions(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == P(1, {{1}}));
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(4).size() == 15);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(kMaxEnumerationSize + 1), std::invalid_argument);
  }

  TEST_CASE("enumerate_partitions is exhaustive, duplicate-free and sorted") {
    for (int n = 1; n <= 8; ++n) {
      const auto all = enumerate_partitions(n);
      CHECK(BigInt(all.size()) == lrc::test::bell_by_stirling(n));
      CHECK(BigInt(all.size()) == bell_number(n));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }

  TEST_CASE("enumerate_noncrossing examples") {
    CHECK(enumerate_noncrossing(4).size() == 14);
    CHECK(enumerate_noncrossing(3) == enumerate_partitions(3));
    std::vector<Partition> filtered;
    for (const auto& p : enumerate_partitions(5))
      if (!lrc::test::crosses_by_quadruples(p)) filtered.push_back(p);
    CHECK(filtered.size() == 42);
    CHECK(enumerate_noncrossing(5) == filtered);
    CHECK_THROWS_AS(enumerate_noncrossing(0), std::invalid_argument);
  }

  TEST_CASE("is_noncrossing examples") {
    CHECK_FALSE(is_noncrossing(P(4, {{1, 3}, {2, 4}})));
    // 2 < 3 < 4 < 5 with 2, 4 in one block and 3, 5 in the other.
    const Partition p = P(5, {{1, 2, 4}, {3, 5}});
    CHECK(lrc::test::crosses_by_quadruples(p));
    CHECK_FALSE(is_noncrossing(p));
    for (int n = 1; n <= 6; ++n) CHECK(is_noncrossing(Partition::single_block(n)));
  }

  TEST_CASE("leq examples") {
    const auto all = enumerate_partitions(4);
    for (const auto& q : all) CHECK(leq(Partition::singletons(4), q));
    for (const auto& p : all) CHECK(leq(p, Partition::single_block(4)));
    CHECK_FALSE(leq(P(3, {{1, 2}, {3}}), P(3, {{1, 3}, {2}})));
    CHECK_THROWS_AS(leq(Partition::singletons(3), Partition::singletons(4)),
                    std::invalid_argument);
  }

  TEST_CASE("meet examples") {
    const Partition p = P(5, {{1, 2, 4}, {3, 5}});
    CHECK(meet(p, Partition::single_block(5)) == p);
    CHECK(meet(p, p) == p);
    // Pairwise intersections: {1,2,4}∩{1,2,3} = {1,2}, {1,2,4}∩{4,5} = {4},
    // {3,5}∩{1,2,3} = {3}, {3,5}∩{4,5} = {5}.
    CHECK(meet(p, P(5, {{1, 2, 3}, {4, 5}})) == P(5, {{1, 2}, {3}, {4}, {5}}));
    CHECK_THROWS_AS(meet(p, Partition::singletons(4)), std::invalid_argument);
  }

  TEST_CASE("act examples") {
    const Partition p = P(5, {{1, 4, 5}, {2, 3}});
    CHECK(act(Permutation::identity(5), p) == p);
    CHECK(act(Permutation({2, 3, 5, 4, 1}), p) == P(5, {{1, 2, 4}, {3, 5}}));
    CHECK(act(Permutation::reversal(3), P(3, {{1, 2}, {3}})) == P(3, {{1}, {2, 3}}));
    CHECK_THROWS_AS(act(Permutation::identity(4), p), std::invalid_argument);
  }

  TEST_CASE("opposite examples") {
    CHECK(opposite(Partition::single_block(6)) == Partition::single_block(6));
    const Partition p = P(5, {{1, 2, 4}, {3, 5}});
    // m -> 6 - m sends {1,2,4} to {5,4,2} and {3,5} to {3,1}.
    CHECK(opposite(p) == P(5, {{2, 4, 5}, {1, 3}}));
    for (const auto& q : enumerate_partitions(5)) CHECK(opposite(opposite(q)) == q);
  }

  TEST_CASE("permutation validation and algebra") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
    const Permutation s({2, 3, 5, 4, 1});
    CHECK(compose(s, s.inverse()) == Permutation::identity(5));
    CHECK(compose(s, Permutation::identity(5)) == s);
    CHECK(s(1) == 2);
    CHECK(s.to_string() == "[2,3,5,4,1]");
  }

  TEST_CASE("counting functions") {
    CHECK(catalan_number(7) == 429);
    CHECK(bell_number(10) == 115975);
    CHECK(catalan_number(30) == lrc::test::catalan_by_factorials(30));
    CHECK(bell_number(30) == lrc::test::bell_by_stirling(30));
  }
}

TEST_SUITE("partitions properties") {
  TEST_CASE("|NC(n)| equals the factorial-formula Catalan number, n <= 8") {
    for (int n = 1; n <= 8; ++n)
      CHECK(BigInt(enumerate_noncrossing(n).size()) == lrc::test::catalan_by_factorials(n));
  }

  TEST_CASE("is_noncrossing agrees with the quadruple scan on P(n), n <= 7") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& p : enumerate_partitions(n))
        CHECK(is_noncrossing(p) == !lrc::test::crosses_by_quadruples(p));
  }

  TEST_CASE("leq is a partial order, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const auto all = enumerate_partitions(n);
      for (const auto& p : all) {
        CHECK(leq(p, p));
        for (const auto& q : all) {
          if (leq(p, q) && leq(q, p)) CHECK(p == q);
          if (!leq(p, q)) continue;
          for (const auto& r : all)
            if (leq(q, r)) CHECK(leq(p, r));
        }
      }
    }
  }

  TEST_CASE("meet is the greatest lower bound, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      const auto all = enumerate_partitions(n);
      for (const auto& p : all)
        for (const auto& q : all) {
          const Partition m = meet(p, q);
          CHECK(m == meet(q, p));
          CHECK(leq(m, p));
          CHECK(leq(m, q));
          for (const auto& r : all)
            if (leq(r, p) && leq(r, q)) CHECK(leq(r, m));
        }
    }
  }

  TEST_CASE("act is a group action, n <= 7") {
    std::mt19937 gen(7);
    for (int n = 1; n <= 7; ++n) {
      const auto all = enumerate_partitions(n);
      for (int trial = 0; trial < 20; ++trial) {
        const Permutation s = lrc::test::random_permutation(n, gen);
        const Permutation t = lrc::test::random_permutation(n, gen);
        const Partition& p = all[gen() % all.size()];
        CHECK(act(s, act(t, p)) == act(compose(s, t), p));
        // Block images computed directly.
        std::set<std::set<int>> expected;
        for (const auto& b : p.blocks()) {
          std::set<int> image;
          for (int m : b) image.insert(s(m));
          expected.insert(image);
        }
        CHECK(lrc::test::as_sets(act(s, p)) == expected);
      }
    }
  }

  TEST_CASE("opposite preserves non-crossing, n <= 6") {
    for (int n = 1; n <= 6; ++n)
      for (const auto& p : enumerate_partitions(n)) {
        CHECK(is_noncrossing(opposite(p)) == is_noncrossing(p));
        CHECK(opposite(p) == act(Permutation::reversal(n), p));
      }
  }
}
