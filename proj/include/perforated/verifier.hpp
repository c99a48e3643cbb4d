// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Checks of operator identities and structural properties of a concrete
// representation, each returning a CheckVerdict. Statements quantified over
// infinitely many words or vectors are checked up to an explicit scope
// (word length bound, window of basis vectors, tolerance) recorded in the
// verdict.

#ifndef PERFORATED_VERIFIER_HPP_
#define PERFORATED_VERIFIER_HPP_

#include <algorithm>  // for max
#include <array>      // for array
#include <cmath>      // for abs
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include <Eigen/Dense>

#include "linalg.hpp"
#include "monomial.hpp"
#include "representation.hpp"
#include "state_vector.hpp"

namespace perforated {

  struct Scope {
    std::size_t word_length_bound = 0;
    std::size_t window_size       = 0;
    double      tolerance         = 0;

    bool operator==(Scope const&) const = default;
  };

  //! Where a check failed: the offending word(s), the basis vector, and the
  //! size of the violation.
  struct Witness {
    std::string monomial;
    std::string label;
    double      residual = 0;

    bool operator==(Witness const&) const = default;
  };

  struct CheckVerdict {
    std::string                   name;
    bool                          passed = true;
    Scope                         scope;
    std::optional<Witness>        witness;
    std::vector<double>           residuals;
    std::map<std::string, double> details;

    bool operator==(CheckVerdict const&) const = default;

    //! Records a failure; the first one becomes the witness.
    void fail(Witness w) {
      if (passed) {
        passed  = false;
        witness = std::move(w);
      }
    }
  };

  //! Default scope used throughout: words up to length 6, 40 basis vectors,
  //! residuals below 1e-10.
  inline constexpr std::size_t default_max_len   = 6;
  inline constexpr std::size_t default_window    = 40;
  inline constexpr double      default_tolerance = 1e-10;
  inline constexpr Element     default_arg_cap   = 6;

  ////////////////////////////////////////////////////////////////////////
  // Generic identity engine
  ////////////////////////////////////////////////////////////////////////

  struct IdentityResidual {
    double                     max_residual = 0;
    std::optional<std::size_t> first_failure;  // position of a basis vector
    double                     failure_residual = 0;
  };

  [[nodiscard]] inline IdentityResidual
  identity_residual(Representation const& rep,
                    Monomial const&       v,
                    Monomial const&       w,
                    std::size_t           window,
                    double                tol) {
    IdentityResidual out;
    for (std::size_t k = 0; k < window; ++k) {
      auto const   b = StateVector::basis(label_at(rep, k));
      double const r = norm(apply_monomial(rep, v, b) - apply_monomial(rep, w, b));
      out.max_residual = std::max(out.max_residual, r);
      if (!(r < tol) && !out.first_failure) {
        out.first_failure    = k;
        out.failure_residual = r;
      }
    }
    return out;
  }

  namespace detail {
    inline std::string equation(Monomial const& v, Monomial const& w) {
      return to_string(v) + " = " + to_string(w);
    }

    // Folds one identity into an aggregate verdict, returning its residual.
    inline double require_identity(CheckVerdict&         verdict,
                                   Representation const& rep,
                                   Monomial const&       v,
                                   Monomial const&       w,
                                   std::size_t           window,
                                   double                tol) {
      auto const r = identity_residual(rep, v, w, window, tol);
      if (r.first_failure) {
        verdict.fail({equation(v, w),
                      to_string(label_at(rep, *r.first_failure)),
                      r.failure_residual});
      }
      return r.max_residual;
    }
  }  // namespace detail

  //! Passes iff ||(V - W) b|| < tol for every basis vector b in the window.
  [[nodiscard]] inline CheckVerdict check_identity(Representation const& rep,
                                                   Monomial const&       v,
                                                   Monomial const&       w,
                                                   std::size_t           window,
                                                   double                tol) {
    CheckVerdict verdict;
    verdict.name  = "identity";
    verdict.scope = {std::max(v.size(), w.size()), window, tol};
    verdict.residuals.push_back(
        detail::require_identity(verdict, rep, v, w, window, tol));
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernels
  ////////////////////////////////////////////////////////////////////////

  //! Null space of the windowed matrix of V, as state vectors.
  [[nodiscard]] inline std::vector<StateVector>
  kernel_basis(Representation const& rep, Monomial const& v, std::size_t window) {
    Eigen::MatrixXcd const   k = null_space(operator_matrix(rep, v, window));
    std::vector<StateVector> out;
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      out.push_back(from_coordinates(rep, k.col(j)));
    }
    return out;
  }

  [[nodiscard]] inline std::size_t kernel_dim(Representation const& rep,
                                              Monomial const&       v,
                                              std::size_t           window) {
    auto const m = operator_matrix(rep, v, window);
    return static_cast<std::size_t>(m.cols()) - numerical_rank(m);
  }

  //! Common null space of several words on the window.
  [[nodiscard]] inline std::vector<StateVector>
  common_kernel_basis(Representation const&        rep,
                      std::vector<Monomial> const& words,
                      std::size_t                  window) {
    std::vector<Eigen::MatrixXcd> blocks;
    for (auto const& w : words) {
      blocks.push_back(operator_matrix(rep, w, window));
    }
    Eigen::MatrixXcd const   k = null_space(stack_rows(blocks));
    std::vector<StateVector> out;
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      out.push_back(from_coordinates(rep, k.col(j)));
    }
    return out;
  }

  namespace words {
    inline Monomial const& shift_by_one() {
      static Monomial const w{coiso(2), iso(3)};
      return w;
    }

    inline Monomial const& p() {
      static Monomial const w{coiso(3), iso(2), coiso(2), iso(3)};
      return w;
    }

    inline Monomial const& q() {
      static Monomial const w{coiso(2), iso(3), coiso(3), iso(2)};
      return w;
    }

    inline Monomial const& back_by_one() {
      static Monomial const w{coiso(3), iso(2)};
      return w;
    }
  }  // namespace words

  ////////////////////////////////////////////////////////////////////////
  // Named checks
  ////////////////////////////////////////////////////////////////////////

  //! T*(n)T(n+1) = T*(n+1)T(n+2) for 2 <= n <= n_max, and
  //! T*(n)T(m) = T*(n+l)T(m+l) for 2 <= n, m <= n_max, 0 <= l <= 5.
  [[nodiscard]] inline CheckVerdict
  check_lemma31_suite(Representation const& rep,
                      Element               n_max  = 8,
                      std::size_t           window = default_window,
                      double                tol    = default_tolerance) {
    if (n_max < 2) {
      throw std::invalid_argument("n_max must be at least 2");
    }
    CheckVerdict verdict;
    verdict.name  = "lemma31";
    verdict.scope = {4, window, tol};
    double lemma  = 0;
    for (Element n = 2; n <= n_max; ++n) {
      lemma = std::max(lemma,
                       detail::require_identity(verdict,
                                                rep,
                                                Monomial{coiso(n), iso(n + 1)},
                                                Monomial{coiso(n + 1), iso(n + 2)},
                                                window,
                                                tol));
    }
    double corollary = 0;
    for (Element n = 2; n <= n_max; ++n) {
      for (Element m = 2; m <= n_max; ++m) {
        for (Element l = 0; l <= 5; ++l) {
          corollary = std::max(
              corollary,
              detail::require_identity(verdict,
                                       rep,
                                       Monomial{coiso(n), iso(m)},
                                       Monomial{coiso(n + l), iso(m + l)},
                                       window,
                                       tol));
        }
      }
    }
    verdict.residuals = {lemma, corollary};
    return verdict;
  }

  //! T*(2) = T*(3)T*(2)T(3), T*(3) = T*(4)T*(2)T(3), T*(3)T(2) = T*(2)T*(2)T(3),
  //! and every h in ker T*(2)T(3) (on the window) is annihilated by
  //! T*(2)T(3), T*(2), T*(3) and T*(3)T(2).
  [[nodiscard]] inline CheckVerdict
  check_obvious_relations(Representation const& rep,
                          std::size_t           window = default_window,
                          double                tol    = default_tolerance) {
    CheckVerdict verdict;
    verdict.name  = "relations";
    verdict.scope = {3, window, tol};

    std::array<std::pair<Monomial, Monomial>, 3> const relations{
        {{Monomial{coiso(2)}, Monomial{coiso(3), coiso(2), iso(3)}},
         {Monomial{coiso(3)}, Monomial{coiso(4), coiso(2), iso(3)}},
         {Monomial{coiso(3), iso(2)}, Monomial{coiso(2), coiso(2), iso(3)}}}};
    for (auto const& [v, w] : relations) {
      verdict.residuals.push_back(
          detail::require_identity(verdict, rep, v, w, window, tol));
    }

    auto const kernel = kernel_basis(rep, words::shift_by_one(), window);
    std::array<Monomial, 4> const annihilators{words::shift_by_one(),
                                               Monomial{coiso(2)},
                                               Monomial{coiso(3)},
                                               words::back_by_one()};
    double consequences = 0;
    for (auto const& h : kernel) {
      for (auto const& a : annihilators) {
        double const r = norm(apply_monomial(rep, a, h));
        consequences   = std::max(consequences, r);
        if (!(r < tol)) {
          verdict.fail({to_string(a) + " on ker(2* 3)", "kernel vector", r});
        }
      }
    }
    verdict.residuals.push_back(consequences);
    verdict.details["kernel_dim"] = static_cast<double>(kernel.size());
    return verdict;
  }

  //! P = T*(3)T(2)T*(2)T(3) and Q = T*(2)T(3)T*(3)T(2) are self-adjoint
  //! idempotents with PQ = Q. Residuals: P self-adjoint, P idempotent,
  //! Q self-adjoint, Q idempotent, PQ - Q.
  [[nodiscard]] inline CheckVerdict check_pq(Representation const& rep,
                                             std::size_t window = default_window,
                                             double      tol = default_tolerance) {
    CheckVerdict verdict;
    verdict.name  = "pq";
    verdict.scope = {8, window, tol};
    for (auto const* w : {&words::p(), &words::q()}) {
      verdict.residuals.push_back(
          detail::require_identity(verdict, rep, *w, star(*w), window, tol));
      verdict.residuals.push_back(
          detail::require_identity(verdict, rep, *w * *w, *w, window, tol));
    }
    verdict.residuals.push_back(detail::require_identity(
        verdict, rep, words::p() * words::q(), words::q(), window, tol));
    verdict.details["pq_norm"] = operator_norm(
        padded_difference(operator_matrix(rep, words::p() * words::q(), window),
                          operator_matrix(rep, words::q(), window)));
    return verdict;
  }

  //! Semidecision: every reduced index-0 word up to max_len acts as an
  //! orthogonal projection on the window.
  [[nodiscard]] inline CheckVerdict
  is_inverse_representation(Representation const& rep,
                            std::size_t           max_len = default_max_len,
                            std::size_t           window  = default_window,
                            double                tol     = default_tolerance,
                            Element               arg_cap = default_arg_cap) {
    if (max_len < 2) {
      throw std::invalid_argument("max_len must be at least 2");
    }
    CheckVerdict verdict;
    verdict.name  = "inverse";
    verdict.scope = {max_len, window, tol};
    double self_adjoint = 0;
    double idempotent   = 0;
    auto const all      = enumerate_index_zero(max_len, arg_cap);
    for (auto const& w : all) {
      self_adjoint = std::max(
          self_adjoint,
          detail::require_identity(verdict, rep, w, star(w), window, tol));
      idempotent = std::max(
          idempotent, detail::require_identity(verdict, rep, w * w, w, window, tol));
      if (!verdict.passed) {
        verdict.witness->monomial = to_string(w);
        break;
      }
    }
    verdict.residuals                = {self_adjoint, idempotent};
    verdict.details["words_checked"] = static_cast<double>(all.size());
    return verdict;
  }

  //! P(n)P(m) = P(m)P(n) for members 2 <= n < m <= arg_cap.
  [[nodiscard]] inline CheckVerdict
  check_commute(Representation const& rep,
                std::size_t           window  = default_window,
                double                tol     = default_tolerance,
                Element               arg_cap = default_arg_cap) {
    CheckVerdict verdict;
    verdict.name  = "commute";
    verdict.scope = {4, window, tol};
    double worst  = 0;
    for (Element n = 2; n <= arg_cap; ++n) {
      for (Element m = n + 1; m <= arg_cap; ++m) {
        auto const pn = elementary_projection(n);
        auto const pm = elementary_projection(m);
        worst         = std::max(
            worst,
            detail::require_identity(verdict, rep, pn * pm, pm * pn, window, tol));
      }
    }
    verdict.residuals = {worst};
    return verdict;
  }

  //! dim ker T*(2)T(3) on the window, stable under enlarging the window by 10,
  //! with the four annihilation consequences on a kernel basis.
  [[nodiscard]] inline CheckVerdict check_kernel(Representation const& rep,
                                                 std::size_t window = default_window,
                                                 double tol = default_tolerance) {
    auto verdict  = check_obvious_relations(rep, window, tol);
    verdict.name  = "kernel";
    verdict.scope = {2, window, tol};
    // Only the kernel part matters here.
    bool const consequences_hold = verdict.residuals.back() < tol;
    verdict.residuals            = {verdict.residuals.back()};
    verdict.passed               = consequences_hold;
    if (consequences_hold) {
      verdict.witness.reset();
    }
    auto const dim    = kernel_dim(rep, words::shift_by_one(), window);
    auto const larger = kernel_dim(rep, words::shift_by_one(), window + 10);
    verdict.details["kernel_dim"]          = static_cast<double>(dim);
    verdict.details["kernel_dim_enlarged"] = static_cast<double>(larger);
    if (dim != larger) {
      verdict.fail({to_string(words::shift_by_one()),
                    "window " + std::to_string(window + 10),
                    std::abs(static_cast<double>(larger) - static_cast<double>(dim))});
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition into copies of Pi0 and Pi1
  ////////////////////////////////////////////////////////////////////////

  struct Decomposition {
    std::size_t  mult_pi1 = 0;
    std::size_t  mult_pi0 = 0;
    bool         residual = false;
    CheckVerdict inverse;
  };

  class NotInverse : public std::runtime_error {
   public:
    explicit NotInverse(CheckVerdict verdict)
        : std::runtime_error(
            "representation is not inverse up to the checked scope"
            + (verdict.witness ? ": " + verdict.witness->monomial : "")),
          _verdict(std::move(verdict)) {}

    [[nodiscard]] CheckVerdict const& verdict() const noexcept {
      return _verdict;
    }

   private:
    CheckVerdict _verdict;
  };

  //! Multiplicities of Pi1 and Pi0 from initial vectors. A copy of Pi1 has
  //! e_0 spanning its part of ker T*(2)T(3). A copy of Pi0 has f_0 spanning
  //! its part of ker T*(2) n ker T*(3) n ker T*(3)T(2), which also contains
  //! every e_0. `residual` reports window directions outside the span of the
  //! orbits of the initial vectors under T(2), T(3) and adjoints.
  [[nodiscard]] inline Decomposition
  decompose(Representation const& rep,
            std::size_t           window  = default_window,
            std::size_t           max_len = default_max_len,
            double                tol     = default_tolerance) {
    Decomposition out;
    out.inverse = is_inverse_representation(rep, max_len, window, tol);
    if (!out.inverse.passed) {
      throw NotInverse(out.inverse);
    }
    out.mult_pi1 = kernel_dim(rep, words::shift_by_one(), window);
    auto const initial = common_kernel_basis(
        rep, {Monomial{coiso(2)}, Monomial{coiso(3)}, words::back_by_one()}, window);
    out.mult_pi0 = initial.size() - std::min(initial.size(), out.mult_pi1);

    auto const window_basis = basis_window(rep, window);
    // f_n is reached from f_0 within ceil(n / 3) + 1 letters
    auto const span = orbit_span(rep, initial, letters_up_to(3), window / 3 + 2);
    for (auto const& b : window_basis) {
      if (span.distance(b) > rank_threshold) {
        out.residual = true;
        break;
      }
    }
    return out;
  }

  [[nodiscard]] inline CheckVerdict check_decompose(Representation const& rep,
                                                    std::size_t window = default_window,
                                                    std::size_t max_len = default_max_len,
                                                    double tol = default_tolerance) {
    CheckVerdict verdict;
    verdict.name  = "decompose";
    verdict.scope = {max_len, window, tol};
    try {
      auto const d                   = decompose(rep, window, max_len, tol);
      verdict.details["mult_pi1"]    = static_cast<double>(d.mult_pi1);
      verdict.details["mult_pi0"]    = static_cast<double>(d.mult_pi0);
      verdict.details["residual"]    = d.residual ? 1.0 : 0.0;
      verdict.residuals              = d.inverse.residuals;
      if (d.residual) {
        verdict.fail({"", "window", 1.0});
        verdict.witness->monomial = "orbit of initial vectors misses the window";
      }
    } catch (NotInverse const& e) {
      verdict.residuals = e.verdict().residuals;
      verdict.fail(*e.verdict().witness);
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Fingerprint
  ////////////////////////////////////////////////////////////////////////

  //! Unitary invariants: norms of [P(n), P(m)] over fixed pairs, ||PQ - Q||,
  //! and dim ker T*(2)T(3), all on a window.
  struct Fingerprint {
    std::vector<double> commutator_norms;
    double              pq_residual = 0;
    std::size_t         kernel_dim  = 0;
    std::size_t         window      = 0;
    bool                stable      = true;

    bool operator==(Fingerprint const&) const = default;
  };

  inline constexpr std::array<std::pair<Element, Element>, 4> fingerprint_pairs{
      {{2, 3}, {2, 4}, {3, 4}, {2, 5}}};

  [[nodiscard]] inline double fingerprint_distance(Fingerprint const& a,
                                                   Fingerprint const& b) {
    double d = std::abs(a.pq_residual - b.pq_residual);
    d        = std::max(d,
                 std::abs(static_cast<double>(a.kernel_dim)
                          - static_cast<double>(b.kernel_dim)));
    for (std::size_t i = 0;
         i < std::min(a.commutator_norms.size(), b.commutator_norms.size());
         ++i) {
      d = std::max(d, std::abs(a.commutator_norms[i] - b.commutator_norms[i]));
    }
    return d;
  }

  namespace detail {
    inline Fingerprint fingerprint_at(Representation const& rep, std::size_t window) {
      Fingerprint out;
      out.window = window;
      for (auto const& [n, m] : fingerprint_pairs) {
        auto const pn = elementary_projection(n);
        auto const pm = elementary_projection(m);
        out.commutator_norms.push_back(
            operator_norm(padded_difference(operator_matrix(rep, pn * pm, window),
                                            operator_matrix(rep, pm * pn, window))));
      }
      out.pq_residual = operator_norm(
          padded_difference(operator_matrix(rep, words::p() * words::q(), window),
                            operator_matrix(rep, words::q(), window)));
      out.kernel_dim = perforated::kernel_dim(rep, words::shift_by_one(), window);
      return out;
    }
  }  // namespace detail

  //! Computed on the smallest window >= `window` (in steps of 10, at most 100
  //! extra) such that enlarging it by 10 moves no component by more than
  //! 1e-10; `stable` is false if none was found.
  [[nodiscard]] inline Fingerprint fingerprint(Representation const& rep,
                                               std::size_t window = default_window) {
    if (window < 20) {
      throw std::invalid_argument("fingerprint needs a window of at least 20");
    }
    Fingerprint current = detail::fingerprint_at(rep, window);
    for (std::size_t extra = 0; extra < 100; extra += 10) {
      Fingerprint next = detail::fingerprint_at(rep, current.window + 10);
      if (fingerprint_distance(current, next) <= 1e-10) {
        return current;
      }
      current = std::move(next);
    }
    current.stable = false;
    return current;
  }

  //! The verdict for an already computed fingerprint.
  [[nodiscard]] inline CheckVerdict fingerprint_verdict(Fingerprint const& f,
                                                        double tol = default_tolerance) {
    CheckVerdict verdict;
    verdict.name      = "fingerprint";
    verdict.scope     = {8, f.window, tol};
    verdict.residuals = f.commutator_norms;
    verdict.residuals.push_back(f.pq_residual);
    verdict.details["kernel_dim"] = static_cast<double>(f.kernel_dim);
    if (!f.stable) {
      verdict.fail({"", "window " + std::to_string(f.window), 1e-10});
    }
    return verdict;
  }

  [[nodiscard]] inline CheckVerdict check_fingerprint(Representation const& rep,
                                                      std::size_t window
                                                      = default_window,
                                                      double tol
                                                      = default_tolerance) {
    return fingerprint_verdict(fingerprint(rep, window), tol);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclicity
  ////////////////////////////////////////////////////////////////////////

  //! Passes iff every window basis vector lies in the span of W seed over
  //! words W of length <= max_len in T(a), T*(a), a <= arg_cap.
  [[nodiscard]] inline CheckVerdict
  cyclicity_check(Representation const& rep,
                  StateVector const&    seed,
                  std::size_t           max_len = 8,
                  std::size_t           window  = 20,
                  Element               arg_cap = default_arg_cap) {
    if (norm(seed) == 0) {
      throw std::invalid_argument("cyclicity needs a nonzero seed");
    }
    CheckVerdict verdict;
    verdict.name  = "cyclic";
    verdict.scope = {max_len, window, rank_threshold};
    auto span     = orbit_span(rep, {seed}, letters_up_to(arg_cap), max_len);
    std::size_t const orbit_dim = span.dimension();
    double            worst     = 0;
    std::size_t       missing   = 0;
    for (auto const& b : basis_window(rep, window)) {
      double const d = span.distance(b);
      worst          = std::max(worst, d);
      if (span.add(b)) {
        ++missing;
        verdict.fail({"", to_string(b.begin()->first), d});
      }
    }
    verdict.residuals                    = {worst};
    verdict.details["orbit_dim"]         = static_cast<double>(orbit_dim);
    verdict.details["intersection_dim"]  = static_cast<double>(window - missing);
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reduction soundness
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline Monomial random_monomial(std::mt19937_64& rng,
                                                std::size_t      max_len,
                                                Element          arg_cap) {
    auto const members = NumericalSemigroup::perforated().members_between(0, arg_cap);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    std::bernoulli_distribution                star_of;
    Monomial                                   out;
    std::size_t const                          n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
      Element const a = members[pick(rng)];
      out.letters.push_back(star_of(rng) ? coiso(a) : iso(a));
    }
    return out;
  }

  //! V = basic_reduce(V) for `samples` random words.
  [[nodiscard]] inline CheckVerdict
  check_reduction(Representation const& rep,
                  std::uint64_t         seed,
                  std::size_t           samples = 100,
                  std::size_t           max_len = 12,
                  std::size_t           window  = default_window,
                  double                tol     = default_tolerance) {
    CheckVerdict verdict;
    verdict.name  = "reduction";
    verdict.scope = {max_len, window, tol};
    std::mt19937_64 rng(seed);
    double          worst = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      auto const v = random_monomial(rng, max_len, default_arg_cap);
      worst        = std::max(
          worst,
          detail::require_identity(verdict, rep, v, basic_reduce(v), window, tol));
    }
    verdict.residuals = {worst};
    return verdict;
  }

}  // namespace perforated

#endif  // PERFORATED_VERIFIER_HPP_
