// perforated - isometric representations of the semigroup Z+ \ {1}

#include <cstdint>
#include <vector>

#include "catch_amalgamated.hpp"

#include "perforated/semigroup.hpp"

using perforated::Element;
using perforated::NumericalSemigroup;

namespace {
  // Brute force: n is a member iff n = 2x + 3y for some x, y >= 0.
  bool representable_by_2_and_3(std::int64_t n) {
    for (std::int64_t y = 0; 3 * y <= n; ++y) {
      if ((n - 3 * y) % 2 == 0) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("membership in <2,3>", "[semigroup]") {
  auto const& s = NumericalSemigroup::perforated();
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.contains(7));
  CHECK_FALSE(s.contains(-2));
  CHECK(s.conductor() == 2);
  CHECK(std::vector<Element>(s.gaps().begin(), s.gaps().end())
        == std::vector<Element>{1});
  for (std::int64_t n = 0; n <= 200; ++n) {
    CHECK(s.contains(n) == representable_by_2_and_3(n));
  }
}

TEST_CASE("natural order", "[semigroup]") {
  auto const& s = NumericalSemigroup::perforated();
  CHECK_FALSE(s.precedes(2, 3));
  CHECK_FALSE(s.precedes(3, 2));
  CHECK(s.precedes(2, 4));
  CHECK(s.precedes(0, 5));

  auto const members = s.members_between(0, 50);
  for (Element a : members) {
    CHECK(s.precedes(a, a));
    for (Element b : members) {
      CHECK(s.contains(a + b));
      if (s.precedes(a, b) && s.precedes(b, a)) {
        CHECK(a == b);
      }
      for (Element c : members) {
        if (s.precedes(a, b) && s.precedes(b, c)) {
          CHECK(s.precedes(a, c));
        }
      }
    }
  }
}

TEST_CASE("min_padding", "[semigroup]") {
  auto const& s = NumericalSemigroup::perforated();
  CHECK(s.min_padding(1) == 2);
  CHECK(s.min_padding(0) == 0);
  CHECK(s.min_padding(-1) == 3);

  for (std::int64_t d = -100; d <= 100; ++d) {
    Element const a = s.min_padding(d);
    CHECK(s.contains(a));
    CHECK(s.contains(a + d));
    // exhaustive scan from 0 finds nothing smaller
    for (Element smaller = 0; smaller < a; ++smaller) {
      CHECK_FALSE((representable_by_2_and_3(smaller)
                   && representable_by_2_and_3(smaller + d)));
    }
  }
}

TEST_CASE("other numerical semigroups", "[semigroup]") {
  NumericalSemigroup const s({5, 3});
  CHECK(std::vector<Element>(s.gaps().begin(), s.gaps().end())
        == std::vector<Element>{1, 2, 4, 7});
  CHECK(s.conductor() == 8);
  CHECK(s.min_padding(1) == 5);

  NumericalSemigroup const n({1});
  CHECK(n.conductor() == 0);
  CHECK(n.gaps().empty());
  CHECK(n.precedes(2, 3));

  CHECK_THROWS_AS(NumericalSemigroup({}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup({0, 3}), std::invalid_argument);
}
