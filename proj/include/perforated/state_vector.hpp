// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Finitely supported vectors over basis labels. All the operators in this
// library map finite support to finite support, so evaluation is exact up to
// floating point.

#ifndef PERFORATED_STATE_VECTOR_HPP_
#define PERFORATED_STATE_VECTOR_HPP_

#include <cmath>    // for sqrt
#include <compare>  // for strong_ordering
#include <complex>  // for complex, conj, norm
#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <map>      // for map
#include <ostream>  // for ostream
#include <string>   // for string

namespace perforated {

  using Complex = std::complex<double>;

  //! Amplitudes below this magnitude are dropped.
  inline constexpr double prune_threshold = 1e-15;

  //! A basis vector: summand `branch` (0 outside direct sums) and index `n`
  //! into the sequence space of that summand.
  struct BasisLabel {
    std::size_t  branch = 0;
    std::int64_t n      = 0;

    auto operator<=>(BasisLabel const&) const = default;
  };

  inline std::string to_string(BasisLabel const& x) {
    return std::to_string(x.branch) + ":" + std::to_string(x.n);
  }

  class StateVector {
   public:
    using container_type = std::map<BasisLabel, Complex>;
    using const_iterator = container_type::const_iterator;

    StateVector() = default;

    static StateVector basis(BasisLabel label) {
      StateVector v;
      v._amplitudes.emplace(label, Complex{1.0, 0.0});
      return v;
    }

    void add(BasisLabel label, Complex amplitude) {
      if (amplitude == Complex{}) {
        return;
      }
      auto [it, inserted] = _amplitudes.try_emplace(label, amplitude);
      if (!inserted) {
        it->second += amplitude;
        if (std::abs(it->second) < prune_threshold) {
          _amplitudes.erase(it);
        }
      }
    }

    [[nodiscard]] Complex at(BasisLabel label) const {
      auto it = _amplitudes.find(label);
      return it == _amplitudes.end() ? Complex{} : it->second;
    }

    void prune(double threshold = prune_threshold) {
      std::erase_if(_amplitudes, [threshold](auto const& kv) {
        return std::abs(kv.second) < threshold;
      });
    }

    [[nodiscard]] bool empty() const noexcept {
      return _amplitudes.empty();
    }

    [[nodiscard]] std::size_t support_size() const noexcept {
      return _amplitudes.size();
    }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _amplitudes.begin();
    }

    [[nodiscard]] const_iterator end() const noexcept {
      return _amplitudes.end();
    }

    //! Exact comparison of the stored amplitudes.
    bool operator==(StateVector const&) const = default;

    StateVector& operator+=(StateVector const& that) {
      for (auto const& [label, x] : that) {
        add(label, x);
      }
      return *this;
    }

    StateVector& operator-=(StateVector const& that) {
      for (auto const& [label, x] : that) {
        add(label, -x);
      }
      return *this;
    }

    StateVector& operator*=(Complex scalar) {
      if (scalar == Complex{}) {
        _amplitudes.clear();
        return *this;
      }
      for (auto& kv : _amplitudes) {
        kv.second *= scalar;
      }
      return *this;
    }

    friend StateVector operator+(StateVector v, StateVector const& w) {
      return v += w;
    }

    friend StateVector operator-(StateVector v, StateVector const& w) {
      return v -= w;
    }

    friend StateVector operator*(Complex scalar, StateVector v) {
      return v *= scalar;
    }

   private:
    container_type _amplitudes;
  };

  //! Linear in the first argument, conjugate-linear in the second.
  [[nodiscard]] inline Complex inner(StateVector const& v,
                                     StateVector const& w) {
    Complex sum{};
    auto    i = v.begin();
    auto    j = w.begin();
    while (i != v.end() && j != w.end()) {
      if (i->first < j->first) {
        ++i;
      } else if (j->first < i->first) {
        ++j;
      } else {
        sum += i->second * std::conj(j->second);
        ++i;
        ++j;
      }
    }
    return sum;
  }

  [[nodiscard]] inline double norm(StateVector const& v) {
    double sum = 0;
    for (auto const& [label, x] : v) {
      sum += std::norm(x);
    }
    return std::sqrt(sum);
  }

  inline std::ostream& operator<<(std::ostream& os, StateVector const& v) {
    os << '{';
    bool first = true;
    for (auto const& [label, x] : v) {
      os << (first ? "" : ", ") << to_string(label) << ": (" << x.real()
         << (x.imag() < 0 ? "" : "+") << x.imag() << "i)";
      first = false;
    }
    return os << '}';
  }

}  // namespace perforated

#endif  // PERFORATED_STATE_VECTOR_HPP_
