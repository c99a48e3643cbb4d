// perforated - isometric representations of the semigroup Z+ \ {1}

#include <algorithm>
#include <random>

#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "test_support.hpp"

using namespace perforated;
using test_support::random_word;

namespace {
  // Largest column residual of two dense words on f_0..f_60.
  double pi0_residual(Monomial const& v, Monomial const& w) {
    auto const   pi0 = oracle::Dense::pi0(220);
    auto const   x   = pi0.window(61);
    oracle::Matrix const d = pi0.apply(v, x) - pi0.apply(w, x);
    double       r   = 0;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      r = std::max(r, d.col(j).norm());
    }
    return r;
  }
}  // namespace

TEST_CASE("star", "[monomial]") {
  CHECK(star(Monomial{iso(2), coiso(3)}) == Monomial{iso(3), coiso(2)});
  CHECK(star(Monomial{}) == Monomial{});
  CHECK(star(Monomial{coiso(2), iso(3)}) == Monomial{coiso(3), iso(2)});
}

TEST_CASE("index and concat", "[monomial]") {
  CHECK(index(Monomial{coiso(2), iso(3)}) == 1);
  CHECK(index(Monomial{}) == 0);
  CHECK(index(Monomial{iso(3), coiso(2), iso(2), coiso(3)}) == 0);

  CHECK(concat(Monomial{iso(2)}, Monomial{iso(3)}) == Monomial{iso(2), iso(3)});
  Monomial const v{coiso(3), iso(2)};
  CHECK(concat(Monomial{}, v) == v);
  auto const w = concat(Monomial{coiso(2)}, Monomial{iso(3)});
  CHECK(w == Monomial{coiso(2), iso(3)});
  CHECK(index(w) == 1);
}

TEST_CASE("index is a homomorphism and anti-commutes with star",
          "[monomial][property]") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto const v = random_word(rng, 12);
    auto const w = random_word(rng, 12);
    REQUIRE(index(star(v)) == -index(v));
    REQUIRE(index(v * w) == index(v) + index(w));
    REQUIRE(star(star(v)) == v);
  }
}

TEST_CASE("basic_reduce examples", "[monomial]") {
  CHECK(basic_reduce(Monomial{iso(2), iso(3)}) == Monomial{iso(5)});
  CHECK(basic_reduce(Monomial{coiso(2), iso(5)}) == Monomial{iso(3)});
  CHECK(pi0_residual(Monomial{coiso(2), iso(5)}, Monomial{iso(3)}) < 1e-12);
  CHECK(basic_reduce(Monomial{coiso(2), iso(3)}) == Monomial{coiso(2), iso(3)});
  CHECK(basic_reduce(Monomial{iso(0), coiso(0)}) == Monomial{});
  CHECK(basic_reduce(Monomial{coiso(3), iso(3)}) == Monomial{});
  CHECK(basic_reduce(Monomial{coiso(5), iso(2)}) == Monomial{coiso(3)});
  // T(b)T*(a) is never rewritten
  CHECK(basic_reduce(Monomial{iso(2), coiso(2)}) == Monomial{iso(2), coiso(2)});
}

TEST_CASE("basic_reduce is sound, idempotent and index preserving",
          "[monomial][property]") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    auto const v = random_word(rng, 12);
    auto const r = basic_reduce(v);
    REQUIRE(index(r) == index(v));
    REQUIRE(basic_reduce(r) == r);
    REQUIRE(is_reduced(r));
    REQUIRE(r.size() <= v.size());
    REQUIRE(pi0_residual(v, r) < 1e-12);
  }
}

TEST_CASE("conjugation limit examples", "[monomial]") {
  auto const a = conj_limit_normal_form(Monomial{iso(3), coiso(2)});
  CHECK(a.pair == NormalFormPair{2, 3});
  CHECK(a.pair.index() == 1);

  CHECK(conj_limit_normal_form(Monomial{coiso(2), iso(2)}).pair
        == NormalFormPair{0, 0});
  CHECK(conj_limit_normal_form(Monomial{iso(2), coiso(3)}).pair
        == NormalFormPair{3, 2});
  CHECK(conj_limit_normal_form(Monomial{}).c_min == 0);

  // T*(2): c = 2 collapses but c = 3 does not, so the threshold is 4.
  CHECK(conj_limit_normal_form(Monomial{coiso(2)}).c_min == 4);
}

TEST_CASE("conjugation limit stabilises in pi0", "[monomial][property]") {
  auto const&     s   = NumericalSemigroup::perforated();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto const v   = random_word(rng, 10);
    auto const lim = conj_limit_normal_form(v);
    REQUIRE(s.contains(lim.pair.a));
    REQUIRE(s.contains(lim.pair.b));
    REQUIRE(lim.pair.a == s.min_padding(index(v)));
    for (Element c : s.members_between(lim.c_min, lim.c_min + 10)) {
      Monomial const conj = Monomial{coiso(c)} * v * Monomial{iso(c)};
      REQUIRE(pi0_residual(conj, lim.pair.word()) < 1e-12);
    }
  }
}

TEST_CASE("pair index is additive", "[monomial][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto const v = random_word(rng, 12);
    auto const w = random_word(rng, 12);
    REQUIRE(conj_limit_normal_form(v * w).pair.index()
            == conj_limit_normal_form(v).pair.index()
                   + conj_limit_normal_form(w).pair.index());
  }
}

TEST_CASE("enumerate_index_zero", "[monomial]") {
  CHECK(enumerate_index_zero(0) == std::vector<Monomial>{Monomial{}});

  auto const two = enumerate_index_zero(2);
  CHECK(std::find(two.begin(), two.end(), Monomial{iso(2), coiso(2)}) != two.end());
  CHECK(std::find(two.begin(), two.end(), Monomial{iso(3), coiso(3)}) != two.end());

  auto const four = enumerate_index_zero(4);
  Monomial const p{coiso(3), iso(2), coiso(2), iso(3)};
  CHECK(std::find(four.begin(), four.end(), p) != four.end());

  for (auto const& w : enumerate_index_zero(6)) {
    REQUIRE(index(w) == 0);
    REQUIRE(is_reduced(w));
    REQUIRE(w.size() <= 6);
    for (auto const& x : w.letters) {
      REQUIRE(x.arg <= 6);
    }
  }
  // deterministic and sorted by length
  auto const again = enumerate_index_zero(6);
  CHECK(again == enumerate_index_zero(6));
  CHECK(std::is_sorted(again.begin(), again.end(), [](auto const& x, auto const& y) {
    return x.size() < y.size();
  }));
}

TEST_CASE("monomial text form", "[monomial]") {
  auto const p = parse_monomial("3* 2 2* 3");
  CHECK(p == Monomial{coiso(3), iso(2), coiso(2), iso(3)});
  CHECK(to_string(p) == "3* 2 2* 3");
  CHECK(parse_monomial("") == Monomial{});
  CHECK(parse_monomial("  \t") == Monomial{});

  try {
    (void) parse_monomial("1 2");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 0);
    CHECK(std::string(e.what()).find("1 is not in the semigroup") != std::string::npos);
  }
  try {
    (void) parse_monomial("2 3x");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_monomial("2 *"), ParseError);
  CHECK_THROWS_AS(parse_monomial("-2"), ParseError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto const v = random_word(rng, 12);
    REQUIRE(parse_monomial(to_string(v)) == v);
  }
}
