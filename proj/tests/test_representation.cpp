// perforated - isometric representations of the semigroup Z+ \ {1}

#include <cmath>
#include <numbers>
#include <random>

#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "test_support.hpp"

using namespace perforated;
using Catch::Matchers::WithinAbs;
using test_support::random_vector;
using test_support::random_word;

namespace {
  StateVector f(std::int64_t n, std::size_t branch = 0) {
    return StateVector::basis({branch, n});
  }

  double distance(StateVector const& a, StateVector const& b) {
    return norm(a - b);
  }

  TauBeta const tau06 = TauBeta::from_beta(0.6);
}  // namespace

TEST_CASE("apply_iso examples", "[representation]") {
  CHECK(distance(apply_iso(Pi0{}, 3, f(0)), f(3)) == 0);
  CHECK(distance(apply_iso(Pi1{}, 2, f(0)), f(2)) == 0);

  CHECK(tau06.t == Catch::Approx(0.8).margin(1e-15));
  auto const out = apply_iso(tau06, 2, f(1));
  CHECK(distance(out, 0.6 * f(2) + 0.8 * f(3)) < 1e-15);
}

TEST_CASE("apply_coiso examples", "[representation]") {
  CHECK(apply_coiso(Pi1{}, 2, f(3)).empty());
  CHECK(distance(apply_coiso(Pi0{}, 2, f(5)), f(3)) == 0);
  CHECK(apply_coiso(Pi0{}, 3, f(2)).empty());
  // e_2 -> ambient f_0 -> <f_0, g> g = 0.6 g
  CHECK(distance(apply_coiso(tau06, 2, f(2)), 0.6 * f(1)) < 1e-15);
}

TEST_CASE("apply_monomial examples", "[representation]") {
  auto const shift = parse_monomial("2* 3");
  for (std::int64_t n = 0; n < 30; ++n) {
    CHECK(distance(apply_monomial(Pi0{}, shift, f(n)), f(n + 1)) == 0);
  }
  CHECK(apply_monomial(Pi1{}, shift, f(0)).empty());
  CHECK(distance(apply_monomial(tau06, shift, f(1)), 0.48 * f(1) + 0.8 * f(2))
        < 1e-15);
  CHECK(distance(apply_monomial(tau06, Monomial{}, f(1)), f(1)) == 0);
}

TEST_CASE("members only", "[representation]") {
  CHECK_THROWS_AS(apply_iso(Pi0{}, 1, f(0)), std::invalid_argument);
  CHECK_THROWS_AS(apply_coiso(Pi1{}, 1, f(0)), std::invalid_argument);
  CHECK_THROWS_AS(apply_iso(Pi0{}, -2, f(0)), std::invalid_argument);
  // label 1 is not a basis vector of pi1
  CHECK_THROWS_AS(apply_iso(Pi1{}, 2, f(1)), std::invalid_argument);
  CHECK(distance(apply_iso(Pi1{}, 0, f(2)), f(2)) == 0);
}

TEST_CASE("inner product", "[representation]") {
  CHECK(inner(f(2), f(2)) == Complex{1, 0});
  CHECK(inner(f(2), f(3)) == Complex{0, 0});
  // g is label 1 of tau; e_2 is label 2
  CHECK(inner(f(1), f(2)) == Complex{0, 0});

  Complex const     i{0, 1};
  StateVector const v = i * f(0);
  // linear in the first argument, conjugate-linear in the second
  CHECK(inner(v, f(0)) == i);
  CHECK(inner(f(0), v) == -i);
  CHECK(inner(v, v).imag() == 0);
  CHECK(norm(f(0) + f(4)) == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("basis_window", "[representation]") {
  auto const pi1 = basis_window(Pi1{}, 3);
  REQUIRE(pi1.size() == 3);
  CHECK(pi1[0] == f(0));
  CHECK(pi1[1] == f(2));
  CHECK(pi1[2] == f(3));

  auto const tau = basis_window(tau06, 2);
  CHECK(tau[0] == f(1));
  CHECK(tau[1] == f(2));

  auto const pi0 = basis_window(Pi0{}, 2);
  CHECK(pi0[0] == f(0));
  CHECK(pi0[1] == f(1));

  // interleaved by branch
  auto const s = basis_window(test_support::sum({Pi0{}, Pi1{}}), 4);
  CHECK(s[0] == f(0, 0));
  CHECK(s[1] == f(0, 1));
  CHECK(s[2] == f(1, 0));
  CHECK(s[3] == f(2, 1));
}

TEST_CASE("operator_matrix", "[representation]") {
  auto const m = operator_matrix(Pi0{}, parse_monomial("2* 3"), 3);
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 3);
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(4, 3);
  expected(1, 0) = expected(2, 1) = expected(3, 2) = 1;
  CHECK((m - expected).norm() == 0);

  for (auto const& [name, rep] : test_support::all_variants()) {
    INFO(name);
    auto const id = operator_matrix(rep, Monomial{}, 7);
    CHECK((id - Eigen::MatrixXcd::Identity(7, 7)).norm() < 1e-12);
  }

  auto const p2 = operator_matrix(Pi1{}, parse_monomial("2 2*"), 3);
  REQUIRE(p2.rows() == 3);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
  diag(1, 1)            = 1;
  CHECK((p2 - diag).norm() == 0);
}

TEST_CASE("isometry, contraction and adjointness", "[representation][property]") {
  std::mt19937_64 rng(17);
  auto const      members = NumericalSemigroup::perforated().members_between(0, 10);
  for (auto const& [name, rep] : test_support::all_variants()) {
    INFO(name);
    for (int i = 0; i < 200; ++i) {
      Element const m = members[rng() % members.size()];
      auto const    v = random_vector(rng, rep, 15);
      auto const    w = random_vector(rng, rep, 25);
      REQUIRE_THAT(norm(apply_iso(rep, m, v)), WithinAbs(norm(v), 1e-12));
      REQUIRE(norm(apply_coiso(rep, m, w)) <= norm(w) + 1e-12);
      REQUIRE(std::abs(inner(apply_iso(rep, m, v), w) - inner(v, apply_coiso(rep, m, w)))
              < 1e-12);
    }
  }
}

TEST_CASE("semigroup law T(a)T(b) = T(a+b)", "[representation][property]") {
  std::mt19937_64 rng(23);
  auto const      members = NumericalSemigroup::perforated().members_between(0, 8);
  for (auto const& [name, rep] : test_support::all_variants()) {
    INFO(name);
    for (int i = 0; i < 100; ++i) {
      Element const a = members[rng() % members.size()];
      Element const b = members[rng() % members.size()];
      auto const    v = random_vector(rng, rep, 20);
      REQUIRE(distance(apply_iso(rep, a, apply_iso(rep, b, v)), apply_iso(rep, a + b, v))
              < 1e-12);
      REQUIRE(distance(apply_coiso(rep, b, apply_coiso(rep, a, v)),
                       apply_coiso(rep, a + b, v))
              < 1e-12);
    }
  }
}

TEST_CASE("sparse evaluation agrees with the dense oracle", "[representation][oracle]") {
  std::mt19937_64 rng(31);
  std::vector<Representation> const reps{Pi0{}, Pi1{}, test_support::tau(0.6),
                                         test_support::tau(0.3, 0.4),
                                         test_support::tau(0),
                                         test_support::unit_phase(2.0)};
  for (auto const& rep : reps) {
    INFO(describe(rep));
    auto const dense = test_support::dense_for(rep, 200);
    for (int i = 0; i < 150; ++i) {
      auto const     w = random_word(rng, 10);
      auto const     v = random_vector(rng, rep, 30);
      oracle::Matrix x = test_support::to_ambient(rep, v, dense.dim());
      oracle::Matrix const expected = dense.apply(w, x);
      auto const got = test_support::to_ambient(rep, apply_monomial(rep, w, v), dense.dim());
      REQUIRE((got - expected.col(0)).norm() < 1e-12);
    }
  }
}

TEST_CASE("direct sums act componentwise", "[representation]") {
  std::mt19937_64 rng(41);
  std::vector<Summand> const parts{Pi1{}, Pi0{}, TauBeta::from_beta({0.3, -0.5})};
  Representation const       rep = test_support::sum(parts);
  for (int i = 0; i < 100; ++i) {
    auto const  w = random_word(rng, 8);
    auto const  v = random_vector(rng, rep, 30);
    auto const  got = apply_monomial(rep, w, v);
    StateVector expected;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      StateVector component;
      for (auto const& [label, x] : v) {
        if (label.branch == b) {
          component.add({0, label.n}, x);
        }
      }
      std::visit([&](auto const& s) { component = apply_monomial(s, w, component); },
                 parts[b]);
      for (auto const& [label, x] : component) {
        expected.add({b, label.n}, x);
      }
    }
    REQUIRE(distance(got, expected) < 1e-12);
  }
}

TEST_CASE("disguise is unitary and changes no inner product", "[representation]") {
  std::mt19937_64      rng(53);
  Representation const rep = test_support::sum({Pi1{}, Pi0{}, Pi1{}},
                                               random_disguise(rng, 12, 8));
  for (int i = 0; i < 100; ++i) {
    auto const v  = random_vector(rng, rep, 15);
    auto const w  = random_vector(rng, rep, 15);
    auto const uv = apply_disguise(rep, v, false);
    auto const uw = apply_disguise(rep, w, false);
    REQUIRE(std::abs(inner(uv, uw) - inner(v, w)) < 1e-12);
    REQUIRE(distance(apply_disguise(rep, uv, true), v) < 1e-12);
  }
  // a disguise that actually mixes branches
  auto const u0 = apply_disguise(rep, f(0), false);
  CHECK(u0 != f(0));
}

TEST_CASE("degenerate tau agrees with pi0 and pi1", "[representation]") {
  auto const words_up_to_4 = [] {
    std::vector<Monomial> out{Monomial{}};
    std::vector<Monomial> frontier{Monomial{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Monomial> next;
      for (auto const& w : frontier) {
        for (auto const& x : letters_up_to(4)) {
          next.push_back(Monomial{x} * w);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }();

  Representation const tau0 = test_support::tau(0);
  for (auto const& w : words_up_to_4) {
    REQUIRE(operator_norm(padded_difference(operator_matrix(tau0, w, 20),
                                            operator_matrix(Pi0{}, w, 20)))
            < 1e-10);
  }

  for (double theta : {std::numbers::pi / 3, std::numbers::pi}) {
    auto const           rep  = test_support::unit_phase(theta);
    Complex const        beta = std::get<TauBeta>(rep.variant).beta;
    for (auto const& w : words_up_to_4) {
      auto const m_tau = operator_matrix(rep, w, 20);
      auto       m_pi1 = operator_matrix(Pi1{}, w, 20);
      // U g = beta e_0: conjugate by D = diag(beta, 1, 1, ...)
      m_pi1.row(0) *= std::conj(beta);
      m_pi1.col(0) *= beta;
      REQUIRE(operator_norm(padded_difference(m_tau, m_pi1)) < 1e-10);
    }
  }
}

TEST_CASE("validation", "[representation]") {
  CHECK_THROWS_AS(TauBeta::from_beta(1.1), std::invalid_argument);
  CHECK_THROWS_AS(validate(Representation{TauBeta{0.6, 0.7}}), std::invalid_argument);
  CHECK_NOTHROW(validate(Representation{tau06}));
  CHECK_THROWS_AS(validate(test_support::sum({})), std::invalid_argument);

  Disguise bad_perm{{0, 0}, {}};
  CHECK_THROWS_AS(validate(test_support::sum({Pi0{}, Pi1{}}, bad_perm)),
                  std::invalid_argument);
  Disguise ok{{1, 0}, {{0, 3, 0.4}}};
  CHECK_NOTHROW(validate(test_support::sum({Pi0{}, Pi1{}}, ok)));

  CHECK(TauBeta::from_beta(std::polar(1.0, std::numbers::pi / 3)).t == 0);
}
