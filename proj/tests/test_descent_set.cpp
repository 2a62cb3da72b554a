#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descpoly/descent_set.hpp"

using namespace descpoly;

namespace {
DescentSet S(std::initializer_list<int> xs) { return DescentSet(std::vector<int>(xs)); }
}  // namespace

TEST_CASE("construction validates the element sequence") {
  CHECK_NOTHROW(DescentSet({std::vector<int>{1, 2, 5}}));
  CHECK_THROWS_AS(DescentSet(std::vector<int>{0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet(std::vector<int>{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet(std::vector<int>{3, 1}), std::invalid_argument);
  CHECK(DescentSet().empty());
  CHECK(DescentSet().m() == 0);
  CHECK(S({1, 2, 5}).m() == 5);
  CHECK(S({1, 2, 5}).size() == 3);
}

TEST_CASE("encoding round-trips") {
  CHECK(DescentSet::parse("1,2,5").encode() == "1,2,5");
  CHECK(DescentSet::parse("").encode() == "");
  CHECK(DescentSet::parse("7") == S({7}));
  CHECK_THROWS_AS(DescentSet::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet::parse("1,2,"), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet::parse("2,1"), std::invalid_argument);
}

TEST_CASE("transforms on {1,2,5}") {
  const DescentSet I = S({1, 2, 5});
  CHECK(I.minus_last() == S({1, 2}));
  CHECK(I.prime() == S({1, 5}));
  CHECK(I.double_prime() == S({5}));
  CHECK(I.shifted(1) == S({1, 4}));
  CHECK(I.shifted(3) == S({1, 2, 4}));
  CHECK(I.drop_shifted(3) == S({1, 2}));
  CHECK(I.complement() == S({3, 4}));
}

TEST_CASE("extension and singleton edge cases") {
  CHECK(S({3}).extended(2) == S({3, 4, 5}));
  CHECK(S({3}).extended(0) == S({3}));
  CHECK(DescentSet().extended(3) == S({1, 2, 3}));
  CHECK(S({1}).prime() == S({1}));
  CHECK(S({1}).double_prime() == DescentSet());
  CHECK(S({1}).complement() == DescentSet());
  CHECK(S({1, 2}).shifted(1) == S({1}));  // decrement drops the produced 0
  CHECK(S({2, 3}).shifted(2) == S({1, 2}));
  CHECK(S({2, 3}).drop_shifted(2) == S({2}));
}

TEST_CASE("transform preconditions") {
  CHECK_THROWS_AS(DescentSet().minus_last(), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet().shifted(1), std::invalid_argument);
  CHECK_THROWS_AS(S({2}).shifted(0), std::out_of_range);
  CHECK_THROWS_AS(S({2}).shifted(2), std::out_of_range);
  CHECK_THROWS_AS(S({2}).drop_shifted(5), std::out_of_range);
  CHECK_THROWS_AS(S({2}).extended(-1), std::invalid_argument);
}

TEST_CASE("family enumeration is complete and ordered") {
  const auto sets = all_descent_sets(4);
  CHECK(sets.size() == 15);  // nonempty subsets of [1,4]
  for (std::size_t i = 1; i < sets.size(); ++i) CHECK(sets[i - 1].m() <= sets[i].m());
  for (const auto& I : sets) CHECK(!I.empty());
  const auto m9 = all_descent_sets(9);
  CHECK(m9.size() == 511);
}
