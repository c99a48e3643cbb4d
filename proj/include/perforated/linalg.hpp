// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Windowed linear algebra: singular values, numerical rank, null spaces and
// spans of orbits. Windowed matrices always carry the full codomain of their
// columns, so these quantities are exact up to floating point.

#ifndef PERFORATED_LINALG_HPP_
#define PERFORATED_LINALG_HPP_

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <stdexcept>  // for out_of_range
#include <vector>     // for vector

#include <Eigen/Dense>

#include "monomial.hpp"
#include "representation.hpp"
#include "state_vector.hpp"

namespace perforated {

  //! Singular values below this count as zero.
  inline constexpr double rank_threshold = 1e-8;

  [[nodiscard]] inline Eigen::VectorXd
  singular_values(Eigen::MatrixXcd const& m) {
    if (m.size() == 0) {
      return {};
    }
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  }

  [[nodiscard]] inline double operator_norm(Eigen::MatrixXcd const& m) {
    auto const s = singular_values(m);
    return s.size() == 0 ? 0.0 : s.maxCoeff();
  }

  [[nodiscard]] inline std::size_t numerical_rank(Eigen::MatrixXcd const& m,
                                                  double threshold
                                                  = rank_threshold) {
    auto const  s = singular_values(m);
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      r += s(i) > threshold ? 1 : 0;
    }
    return r;
  }

  //! Orthonormal columns spanning {x : m x = 0}.
  [[nodiscard]] inline Eigen::MatrixXcd null_space(Eigen::MatrixXcd const& m,
                                                   double threshold
                                                   = rank_threshold) {
    Eigen::Index const n = m.cols();
    if (m.rows() == 0) {
      return Eigen::MatrixXcd::Identity(n, n);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    auto const&                        s = svd.singularValues();
    Eigen::Index                       r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      r += s(i) > threshold ? 1 : 0;
    }
    return svd.matrixV().rightCols(n - r);
  }

  //! Stacks matrices vertically, padding the shorter ones with zero rows.
  [[nodiscard]] inline Eigen::MatrixXcd
  stack_rows(std::vector<Eigen::MatrixXcd> const& blocks) {
    Eigen::Index rows = 0;
    Eigen::Index cols = 0;
    for (auto const& b : blocks) {
      rows += b.rows();
      cols = std::max(cols, b.cols());
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows, cols);
    Eigen::Index     at  = 0;
    for (auto const& b : blocks) {
      out.block(at, 0, b.rows(), b.cols()) = b;
      at += b.rows();
    }
    return out;
  }

  //! a - b after padding both to a common row count.
  [[nodiscard]] inline Eigen::MatrixXcd padded_difference(Eigen::MatrixXcd a,
                                                          Eigen::MatrixXcd b) {
    Eigen::Index const rows = std::max(a.rows(), b.rows());
    a.conservativeResizeLike(Eigen::MatrixXcd::Zero(rows, a.cols()));
    b.conservativeResizeLike(Eigen::MatrixXcd::Zero(rows, b.cols()));
    return a - b;
  }

  //! The state vector with the given coordinates (position k is entry k).
  [[nodiscard]] inline StateVector from_coordinates(Representation const& rep,
                                                    Eigen::VectorXcd const& x) {
    StateVector out;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      if (std::abs(x(k)) >= prune_threshold) {
        out.add(label_at(rep, static_cast<std::size_t>(k)), x(k));
      }
    }
    return out;
  }

  //! An orthonormal basis grown by Gram-Schmidt (classical, applied twice)
  //! in position coordinates, kept as the leading columns of one matrix. The
  //! coordinate length grows as needed.
  class OrthonormalSpan {
   public:
    explicit OrthonormalSpan(Representation rep, double threshold = rank_threshold)
        : _rep(std::move(rep)), _threshold(threshold) {}

    //! Adds the component of v orthogonal to the span, returning true if it
    //! was larger than the threshold.
    bool add(StateVector const& v) {
      std::size_t const need = position_extent(_rep, v);
      if (need > _rows) {
        reshape(need, _q.cols());
      }
      Eigen::VectorXcd x = coordinates(_rep, v, _rows);
      project_out(x);
      double const r = x.norm();
      if (r <= _threshold) {
        return false;
      }
      if (_dim == static_cast<std::size_t>(_q.cols())) {
        reshape(_rows, std::max<std::size_t>(16, 2 * _dim));
      }
      _q.col(static_cast<Eigen::Index>(_dim++)) = x / r;
      return true;
    }

    [[nodiscard]] std::size_t dimension() const noexcept {
      return _dim;
    }

    [[nodiscard]] StateVector vector(std::size_t i) const {
      if (i >= _dim) {
        throw std::out_of_range("OrthonormalSpan::vector");
      }
      return from_coordinates(_rep, _q.col(static_cast<Eigen::Index>(i)));
    }

    //! Distance from v to the span.
    [[nodiscard]] double distance(StateVector const& v) const {
      std::size_t const rows = std::max(_rows, position_extent(_rep, v));
      Eigen::VectorXcd  x    = coordinates(_rep, v, rows);
      // components past _rows are already orthogonal to the span
      Eigen::VectorXcd head = x.head(static_cast<Eigen::Index>(_rows));
      project_out(head);
      x.head(static_cast<Eigen::Index>(_rows)) = head;
      return x.norm();
    }

   private:
    void project_out(Eigen::VectorXcd& x) const {
      auto const q = _q.leftCols(static_cast<Eigen::Index>(_dim));
      for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXcd const c = q.adjoint() * x;
        x.noalias() -= q * c;
      }
    }

    void reshape(std::size_t rows, Eigen::Index cols) {
      _q.conservativeResizeLike(
          Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows), cols));
      _rows = rows;
    }

    Representation   _rep;
    double           _threshold;
    std::size_t      _rows = 0;
    std::size_t      _dim  = 0;
    Eigen::MatrixXcd _q;
  };

  //! The span of W v over seeds v and words W of length <= max_len in the
  //! given letters, grown one letter at a time from the newest directions.
  [[nodiscard]] inline OrthonormalSpan
  orbit_span(Representation const&               rep,
             std::vector<StateVector> const&     seeds,
             std::vector<TrivialMonomial> const& letters,
             std::size_t                         max_len) {
    OrthonormalSpan span(rep);
    std::size_t     frontier = 0;
    for (auto const& v : seeds) {
      span.add(v);
    }
    for (std::size_t step = 0; step < max_len; ++step) {
      std::size_t const end = span.dimension();
      if (frontier == end) {
        break;
      }
      for (std::size_t i = frontier; i < end; ++i) {
        StateVector const q = span.vector(i);
        for (auto const& x : letters) {
          span.add(apply(rep, x, q));
        }
      }
      frontier = end;
    }
    return span;
  }

  //! T(a) and T*(a) for every nonzero member a <= arg_cap.
  [[nodiscard]] inline std::vector<TrivialMonomial> letters_up_to(Element arg_cap) {
    std::vector<TrivialMonomial> out;
    for (Element a : NumericalSemigroup::perforated().members_between(1, arg_cap)) {
      out.push_back(iso(a));
      out.push_back(coiso(a));
    }
    return out;
  }

}  // namespace perforated

#endif  // PERFORATED_LINALG_HPP_
