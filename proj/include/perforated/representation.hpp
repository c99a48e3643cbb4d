// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Concrete representations acting on finitely supported vectors:
//
//   Pi0      shift on l2(Z+),            T(m) f_n = f_{n+m}
//   Pi1      shift on l2(Z+ \ {1}),      T(m) e_n = e_{n+m}
//   TauBeta  compression of Pi0 to span{g, e_2, e_3, ...}, g = beta e_0 + t e_1
//   DirectSum of the above, optionally conjugated by a finite-support unitary.
//
// Labels: Pi0 uses n >= 0, Pi1 uses n in Z+ \ {1}, TauBeta uses n = 1 for g
// and n >= 2 for e_n. The canonical order of basis vectors ("positions") is
// f_0, f_1, ... / e_0, e_2, e_3, ... / g, e_2, e_3, ...; a direct sum of p
// parts interleaves them, position k being the (k / p)-th vector of part k % p.

#ifndef PERFORATED_REPRESENTATION_HPP_
#define PERFORATED_REPRESENTATION_HPP_

#include <algorithm>  // for max, sort
#include <cmath>      // for cos, sin, sqrt, isfinite
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <random>     // for mt19937_64, uniform_*_distribution
#include <sstream>    // for ostringstream
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <utility>    // for pair
#include <variant>    // for variant, visit
#include <vector>     // for vector

#include <Eigen/Dense>

#include "monomial.hpp"
#include "semigroup.hpp"
#include "state_vector.hpp"

namespace perforated {

  inline constexpr double unit_tolerance = 1e-12;

  struct Pi0 {
    bool operator==(Pi0 const&) const = default;
  };

  struct Pi1 {
    bool operator==(Pi1 const&) const = default;
  };

  //! Requires |beta|^2 + t^2 = 1 and t >= 0, so g is a unit vector.
  struct TauBeta {
    Complex beta{0.0, 0.0};
    double  t = 1.0;

    //! Derives t from beta; rejects |beta| > 1. When |beta| is within
    //! unit_tolerance of 1 the sqrt would amplify rounding (1e-16 -> 1e-8),
    //! so t is exactly 0 there.
    static TauBeta from_beta(Complex beta) {
      double const r2 = std::norm(beta);
      if (!(r2 <= 1.0 + unit_tolerance)) {
        throw std::invalid_argument("tau_beta needs |beta| <= 1");
      }
      double const rest = 1.0 - r2;
      return TauBeta{beta, rest <= unit_tolerance ? 0.0 : std::sqrt(rest)};
    }

    bool operator==(TauBeta const&) const = default;
  };

  using Summand = std::variant<Pi0, Pi1, TauBeta>;

  //! The plane rotation e_i -> cos e_i + sin e_j, e_j -> -sin e_i + cos e_j,
  //! with i, j canonical positions.
  struct Rotation {
    std::size_t i     = 0;
    std::size_t j     = 0;
    double      theta = 0;

    bool operator==(Rotation const&) const = default;
  };

  //! U = R_last ... R_first * Perm, where Perm sends position k to
  //! permutation[k] (positions beyond the list are fixed).
  struct Disguise {
    std::vector<std::size_t> permutation;
    std::vector<Rotation>    rotations;

    bool operator==(Disguise const&) const = default;
  };

  struct DirectSum {
    std::vector<Summand>    parts;
    std::optional<Disguise> disguise;

    bool operator==(DirectSum const&) const = default;
  };

  struct Representation {
    std::variant<Pi0, Pi1, TauBeta, DirectSum> variant;

    Representation() = default;
    Representation(Pi0 x) : variant(x) {}           // NOLINT
    Representation(Pi1 x) : variant(x) {}           // NOLINT
    Representation(TauBeta x) : variant(x) {}       // NOLINT
    Representation(DirectSum x) : variant(std::move(x)) {}  // NOLINT

    bool operator==(Representation const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Labels and positions
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename... Ts>
    struct overloaded : Ts... {
      using Ts::operator()...;
    };
    template <typename... Ts>
    overloaded(Ts...) -> overloaded<Ts...>;

    inline std::int64_t summand_label(Summand const& s, std::size_t i) {
      auto const k = static_cast<std::int64_t>(i);
      return std::visit(overloaded{[&](Pi0) { return k; },
                                   [&](Pi1) { return k == 0 ? 0 : k + 1; },
                                   [&](TauBeta const&) { return k + 1; }},
                        s);
    }

    inline std::size_t summand_position(Summand const& s, std::int64_t n) {
      return static_cast<std::size_t>(
          std::visit(overloaded{[&](Pi0) { return n; },
                                [&](Pi1) { return n == 0 ? 0 : n - 1; },
                                [&](TauBeta const&) { return n - 1; }},
                     s));
    }

    inline bool summand_label_valid(Summand const& s, std::int64_t n) {
      return std::visit(overloaded{[&](Pi0) { return n >= 0; },
                                   [&](Pi1) { return n >= 0 && n != 1; },
                                   [&](TauBeta const&) { return n >= 1; }},
                        s);
    }
  }  // namespace detail

  [[nodiscard]] inline std::size_t part_count(Representation const& rep) {
    if (auto const* sum = std::get_if<DirectSum>(&rep.variant)) {
      return sum->parts.size();
    }
    return 1;
  }

  //! The summand carrying `branch` (the representation itself when it is
  //! not a direct sum).
  [[nodiscard]] inline Summand part(Representation const& rep,
                                    std::size_t           branch) {
    return std::visit(
        detail::overloaded{
            [&](DirectSum const& sum) { return sum.parts.at(branch); },
            [](auto const& x) { return Summand{x}; }},
        rep.variant);
  }

  [[nodiscard]] inline BasisLabel label_at(Representation const& rep,
                                           std::size_t           position) {
    std::size_t const p      = part_count(rep);
    std::size_t const branch = position % p;
    return {branch, detail::summand_label(part(rep, branch), position / p)};
  }

  [[nodiscard]] inline std::size_t position_of(Representation const& rep,
                                               BasisLabel            label) {
    std::size_t const p = part_count(rep);
    return detail::summand_position(part(rep, label.branch), label.n) * p
           + label.branch;
  }

  [[nodiscard]] inline bool is_valid_label(Representation const& rep,
                                           BasisLabel            label) {
    return label.branch < part_count(rep)
           && detail::summand_label_valid(part(rep, label.branch), label.n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  inline void validate(TauBeta const& tau) {
    if (!std::isfinite(tau.beta.real()) || !std::isfinite(tau.beta.imag())
        || !std::isfinite(tau.t) || tau.t < 0) {
      throw std::invalid_argument("tau_beta needs finite beta and t >= 0");
    }
    if (std::abs(std::norm(tau.beta) + tau.t * tau.t - 1.0) > unit_tolerance) {
      throw std::invalid_argument("tau_beta needs |beta|^2 + t^2 = 1");
    }
  }

  inline void validate(Disguise const& u) {
    std::vector<bool> seen(u.permutation.size(), false);
    for (std::size_t k : u.permutation) {
      if (k >= seen.size() || seen[k]) {
        throw std::invalid_argument(
            "disguise permutation must be a bijection of 0..n-1");
      }
      seen[k] = true;
    }
    for (auto const& r : u.rotations) {
      if (r.i == r.j) {
        throw std::invalid_argument("disguise rotation needs two positions");
      }
      if (!std::isfinite(r.theta)) {
        throw std::invalid_argument("disguise rotation angle must be finite");
      }
    }
  }

  inline void validate(Representation const& rep) {
    std::visit(detail::overloaded{
                   [](Pi0) {},
                   [](Pi1) {},
                   [](TauBeta const& tau) { validate(tau); },
                   [](DirectSum const& sum) {
                     if (sum.parts.empty()) {
                       throw std::invalid_argument(
                           "direct_sum needs at least one part");
                     }
                     for (auto const& s : sum.parts) {
                       if (auto const* tau = std::get_if<TauBeta>(&s)) {
                         validate(*tau);
                       }
                     }
                     if (sum.disguise) {
                       validate(*sum.disguise);
                     }
                   }},
               rep.variant);
  }

  ////////////////////////////////////////////////////////////////////////
  // Disguise action
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    using PositionVector = std::map<std::size_t, Complex>;

    inline PositionVector to_positions(Representation const& rep,
                                       StateVector const&    v) {
      PositionVector out;
      for (auto const& [label, x] : v) {
        out[position_of(rep, label)] += x;
      }
      return out;
    }

    inline StateVector from_positions(Representation const& rep,
                                      PositionVector const& v) {
      StateVector out;
      for (auto const& [k, x] : v) {
        if (std::abs(x) >= prune_threshold) {
          out.add(label_at(rep, k), x);
        }
      }
      return out;
    }

    inline void rotate(PositionVector& v, Rotation const& r, double sign) {
      double const c  = std::cos(r.theta);
      double const s  = sign * std::sin(r.theta);
      auto const   xi = v.contains(r.i) ? v[r.i] : Complex{};
      auto const   xj = v.contains(r.j) ? v[r.j] : Complex{};
      if (xi == Complex{} && xj == Complex{}) {
        return;
      }
      v[r.i] = c * xi - s * xj;
      v[r.j] = s * xi + c * xj;
    }

    inline void permute(PositionVector&                 v,
                        std::vector<std::size_t> const& perm,
                        bool                            inverse) {
      std::vector<std::size_t> map = perm;
      if (inverse) {
        for (std::size_t k = 0; k < perm.size(); ++k) {
          map[perm[k]] = k;
        }
      }
      PositionVector out;
      for (auto const& [k, x] : v) {
        out[k < map.size() ? map[k] : k] += x;
      }
      v = std::move(out);
    }
  }  // namespace detail

  //! U v for the disguise of a direct sum (identity when there is none).
  [[nodiscard]] inline StateVector apply_disguise(Representation const& rep,
                                                  StateVector const&    v,
                                                  bool adjoint = false) {
    auto const* sum = std::get_if<DirectSum>(&rep.variant);
    if (sum == nullptr || !sum->disguise) {
      return v;
    }
    auto const& u = *sum->disguise;
    auto        x = detail::to_positions(rep, v);
    if (!adjoint) {
      detail::permute(x, u.permutation, false);
      for (auto const& r : u.rotations) {
        detail::rotate(x, r, 1.0);
      }
    } else {
      for (auto it = u.rotations.rbegin(); it != u.rotations.rend(); ++it) {
        detail::rotate(x, *it, -1.0);
      }
      detail::permute(x, u.permutation, true);
    }
    return detail::from_positions(rep, x);
  }

  //! A disguise with `count` random rotations and a random permutation, both
  //! supported on positions below `support`.
  [[nodiscard]] inline Disguise random_disguise(std::mt19937_64& rng,
                                                std::size_t      support,
                                                std::size_t      count) {
    Disguise u;
    if (support < 2) {
      return u;
    }
    u.permutation.resize(support);
    for (std::size_t k = 0; k < support; ++k) {
      u.permutation[k] = k;
    }
    std::shuffle(u.permutation.begin(), u.permutation.end(), rng);
    std::uniform_int_distribution<std::size_t> pos(0, support - 1);
    std::uniform_real_distribution<double>     angle(0.1, 3.0);
    for (std::size_t r = 0; r < count; ++r) {
      std::size_t i = pos(rng);
      std::size_t j = pos(rng);
      while (j == i) {
        j = pos(rng);
      }
      u.rotations.push_back({i, j, angle(rng)});
    }
    return u;
  }

  ////////////////////////////////////////////////////////////////////////
  // Action of T(m) and T*(m)
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require_member(Element m) {
      if (!NumericalSemigroup::perforated().contains(m)) {
        throw std::invalid_argument(std::to_string(m)
                                    + " is not in the semigroup");
      }
    }

    inline void iso_entry(Summand const& s,
                          Element        m,
                          BasisLabel     label,
                          Complex        x,
                          StateVector&   out) {
      std::size_t const b = label.branch;
      if (auto const* tau = std::get_if<TauBeta>(&s); tau && label.n == 1) {
        // g -> beta f_m + t f_{m+1}, both in H_0 since m >= 2
        out.add({b, m}, tau->beta * x);
        out.add({b, m + 1}, tau->t * x);
        return;
      }
      out.add({b, label.n + m}, x);
    }

    inline void coiso_entry(Summand const& s,
                            Element        m,
                            BasisLabel     label,
                            Complex        x,
                            StateVector&   out) {
      std::size_t const  b = label.branch;
      std::int64_t const k = label.n - m;
      std::visit(overloaded{[&](Pi0) {
                              if (k >= 0) {
                                out.add({b, k}, x);
                              }
                            },
                            [&](Pi1) {
                              if (NumericalSemigroup::perforated().contains(k)) {
                                out.add({b, k}, x);
                              }
                            },
                            [&](TauBeta const& tau) {
                              // g sits on f_0, f_1 and is killed since m >= 2;
                              // f_k for k >= 2 stays, f_0 and f_1 project to g.
                              if (label.n == 1 || k < 0) {
                                return;
                              }
                              if (k == 0) {
                                out.add({b, 1}, std::conj(tau.beta) * x);
                              } else if (k == 1) {
                                out.add({b, 1}, tau.t * x);
                              } else {
                                out.add({b, k}, x);
                              }
                            }},
                 s);
    }

    template <typename Entry>
    StateVector apply_letter(Representation const& rep,
                             Element               m,
                             StateVector const&    v,
                             Entry&&               entry) {
      require_member(m);
      if (m == 0) {
        return v;
      }
      StateVector const w = apply_disguise(rep, v, true);
      StateVector       out;
      for (auto const& [label, x] : w) {
        if (!is_valid_label(rep, label)) {
          throw std::invalid_argument("invalid basis label "
                                      + to_string(label));
        }
        entry(part(rep, label.branch), m, label, x, out);
      }
      return apply_disguise(rep, out, false);
    }
  }  // namespace detail

  [[nodiscard]] inline StateVector apply_iso(Representation const& rep,
                                             Element               m,
                                             StateVector const&    v) {
    return detail::apply_letter(rep, m, v, detail::iso_entry);
  }

  [[nodiscard]] inline StateVector apply_coiso(Representation const& rep,
                                               Element               m,
                                               StateVector const&    v) {
    return detail::apply_letter(rep, m, v, detail::coiso_entry);
  }

  [[nodiscard]] inline StateVector apply(Representation const& rep,
                                         TrivialMonomial const& x,
                                         StateVector const&    v) {
    return x.kind == Kind::Iso ? apply_iso(rep, x.arg, v)
                               : apply_coiso(rep, x.arg, v);
  }

  //! The rightmost letter acts first.
  [[nodiscard]] inline StateVector apply_monomial(Representation const& rep,
                                                  Monomial const&       word,
                                                  StateVector           v) {
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
      v = apply(rep, *it, v);
      if (v.empty()) {
        break;
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Windows and matrices
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::vector<StateVector>
  basis_window(Representation const& rep, std::size_t size) {
    std::vector<StateVector> out;
    out.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
      out.push_back(StateVector::basis(label_at(rep, k)));
    }
    return out;
  }

  //! One past the largest position in the support of v (0 if v is empty).
  [[nodiscard]] inline std::size_t position_extent(Representation const& rep,
                                                   StateVector const&    v) {
    std::size_t out = 0;
    for (auto const& [label, x] : v) {
      out = std::max(out, position_of(rep, label) + 1);
    }
    return out;
  }

  //! Coordinates of v in the first `rows` positions.
  [[nodiscard]] inline Eigen::VectorXcd
  coordinates(Representation const& rep, StateVector const& v, std::size_t rows) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rows));
    for (auto const& [label, x] : v) {
      std::size_t const k = position_of(rep, label);
      if (k >= rows) {
        throw std::out_of_range("vector support exceeds the coordinate window");
      }
      out(static_cast<Eigen::Index>(k)) += x;
    }
    return out;
  }

  //! Lays out vectors as columns; the row count is enlarged to hold every
  //! support exactly and is at least `min_rows`.
  [[nodiscard]] inline Eigen::MatrixXcd
  columns_matrix(Representation const&           rep,
                 std::vector<StateVector> const& columns,
                 std::size_t                     min_rows = 0) {
    std::size_t rows = min_rows;
    for (auto const& v : columns) {
      rows = std::max(rows, position_extent(rep, v));
    }
    Eigen::MatrixXcd out
        = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out.col(static_cast<Eigen::Index>(j)) = coordinates(rep, columns[j], rows);
    }
    return out;
  }

  //! Column j holds word applied to the j-th basis vector; the codomain has at
  //! least domain_size rows and enough to contain every image exactly.
  [[nodiscard]] inline Eigen::MatrixXcd operator_matrix(Representation const& rep,
                                                        Monomial const&       word,
                                                        std::size_t domain_size) {
    std::vector<StateVector> images;
    images.reserve(domain_size);
    for (auto const& b : basis_window(rep, domain_size)) {
      images.push_back(apply_monomial(rep, word, b));
    }
    return columns_matrix(rep, images, domain_size);
  }

  [[nodiscard]] inline std::string describe(Summand const& s) {
    return std::visit(detail::overloaded{
                          [](Pi0) -> std::string { return "pi0"; },
                          [](Pi1) -> std::string { return "pi1"; },
                          [](TauBeta const& tau) -> std::string {
                            std::ostringstream os;
                            os << "tau_beta(" << tau.beta.real()
                               << (tau.beta.imag() < 0 ? "" : "+")
                               << tau.beta.imag() << "i)";
                            return os.str();
                          }},
                      s);
  }

  [[nodiscard]] inline std::string describe(Representation const& rep) {
    return std::visit(detail::overloaded{
                          [](DirectSum const& sum) {
                            std::string out = "direct_sum[";
                            for (std::size_t i = 0; i < sum.parts.size(); ++i) {
                              out += (i ? ", " : "") + describe(sum.parts[i]);
                            }
                            out += "]";
                            if (sum.disguise) {
                              out += " (disguised)";
                            }
                            return out;
                          },
                          [](auto const& x) { return describe(Summand{x}); }},
                      rep.variant);
  }

}  // namespace perforated

#endif  // PERFORATED_REPRESENTATION_HPP_
