// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Numerical semigroups: membership, the natural order a < b iff b - a is a
// member, and the padding used to pick representatives in the Grothendieck
// group S - S (which is Z for every numerical semigroup).

#ifndef PERFORATED_SEMIGROUP_HPP_
#define PERFORATED_SEMIGROUP_HPP_

#include <algorithm>  // for sort, unique
#include <cstdint>    // for int64_t
#include <numeric>    // for gcd
#include <span>       // for span
#include <stdexcept>  // for invalid_argument
#include <string>     // for to_string
#include <vector>     // for vector

namespace perforated {

  //! An element of the semigroup (a non-negative integer that is a member).
  using Element = std::int64_t;

  //! An element of the Grothendieck group S - S, which is Z here.
  using GroupIndex = std::int64_t;

  //! A numerical semigroup given by generators with gcd 1.
  //!
  //! Membership below the conductor is tabulated once at construction, every
  //! integer at or above the conductor is a member. Instances are immutable.
  class NumericalSemigroup {
   public:
    explicit NumericalSemigroup(std::vector<Element> generators)
        : _generators(std::move(generators)) {
      if (_generators.empty()) {
        throw std::invalid_argument("a numerical semigroup needs generators");
      }
      std::sort(_generators.begin(), _generators.end());
      _generators.erase(std::unique(_generators.begin(), _generators.end()),
                        _generators.end());
      Element g = 0;
      for (Element x : _generators) {
        if (x <= 0) {
          throw std::invalid_argument("generators must be positive, found "
                                      + std::to_string(x));
        }
        g = std::gcd(g, x);
      }
      if (g != 1) {
        throw std::invalid_argument(
            "generators must have gcd 1 (the complement must be finite)");
      }
      tabulate();
    }

    //! The semigroup Z+ \ {1} = <2, 3>.
    static NumericalSemigroup const& perforated() {
      static NumericalSemigroup const s({2, 3});
      return s;
    }

    [[nodiscard]] bool contains(std::int64_t n) const noexcept {
      if (n < 0) {
        return false;
      }
      if (n >= _conductor) {
        return true;
      }
      return _member[static_cast<std::size_t>(n)];
    }

    //! a precedes b iff b = a + c for some member c.
    [[nodiscard]] bool precedes(Element a, Element b) const noexcept {
      return contains(a) && contains(b) && contains(b - a);
    }

    //! The least member a with a + d also a member.
    [[nodiscard]] Element min_padding(GroupIndex d) const noexcept {
      Element a = d < 0 ? -d : 0;
      while (!(contains(a) && contains(a + d))) {
        ++a;
      }
      return a;
    }

    [[nodiscard]] Element conductor() const noexcept {
      return _conductor;
    }

    [[nodiscard]] std::span<Element const> generators() const noexcept {
      return _generators;
    }

    [[nodiscard]] std::span<Element const> gaps() const noexcept {
      return _gaps;
    }

    //! The members in [lo, hi], ascending.
    [[nodiscard]] std::vector<Element> members_between(Element lo,
                                                       Element hi) const {
      std::vector<Element> out;
      for (Element n = std::max<Element>(lo, 0); n <= hi; ++n) {
        if (contains(n)) {
          out.push_back(n);
        }
      }
      return out;
    }

    bool operator==(NumericalSemigroup const& that) const noexcept {
      return _generators == that._generators;
    }

   private:
    // Sieve until min(generators) consecutive members appear; from there on
    // every integer is a member.
    void tabulate() {
      Element const       smallest = _generators.front();
      std::vector<bool>   member{true};
      Element             run = 1;
      Element             n   = 0;
      while (run < smallest) {
        ++n;
        bool in = false;
        for (Element x : _generators) {
          if (x <= n && member[static_cast<std::size_t>(n - x)]) {
            in = true;
            break;
          }
        }
        member.push_back(in);
        run = in ? run + 1 : 0;
      }
      _conductor = n - smallest + 1;
      member.resize(static_cast<std::size_t>(_conductor));
      _member = std::move(member);
      for (Element k = 0; k < _conductor; ++k) {
        if (!_member[static_cast<std::size_t>(k)]) {
          _gaps.push_back(k);
        }
      }
    }

    std::vector<Element> _generators;
    std::vector<Element> _gaps;
    std::vector<bool>    _member;
    Element              _conductor = 0;
  };

}  // namespace perforated

#endif  // PERFORATED_SEMIGROUP_HPP_
