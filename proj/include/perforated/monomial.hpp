// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Symbolic monomials: words in T(a) and T*(b). Nothing here depends on a
// concrete representation; the rewriting in basic_reduce only uses identities
// that hold for every isometric representation.

#ifndef PERFORATED_MONOMIAL_HPP_
#define PERFORATED_MONOMIAL_HPP_

#include <algorithm>  // for max, min, reverse
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t
#include <functional> // for function
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include "semigroup.hpp"

namespace perforated {

  enum class Kind : std::uint8_t { Iso, CoIso };

  //! T(arg) when kind is Iso, T*(arg) when kind is CoIso.
  struct TrivialMonomial {
    Kind    kind;
    Element arg;

    auto operator<=>(TrivialMonomial const&) const = default;
  };

  [[nodiscard]] constexpr TrivialMonomial iso(Element a) noexcept {
    return {Kind::Iso, a};
  }

  [[nodiscard]] constexpr TrivialMonomial coiso(Element a) noexcept {
    return {Kind::CoIso, a};
  }

  //! A finite product of trivial monomials, written left to right as an
  //! operator product. The empty word is the identity.
  struct Monomial {
    std::vector<TrivialMonomial> letters;

    Monomial() = default;
    Monomial(std::initializer_list<TrivialMonomial> init) : letters(init) {}
    explicit Monomial(std::vector<TrivialMonomial> w) : letters(std::move(w)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return letters.empty();
    }

    auto operator<=>(Monomial const&) const = default;
    bool operator==(Monomial const&) const  = default;
  };

  //! Raised by parse_monomial, with the character offset of the bad token.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t position, std::string const& what)
        : std::runtime_error("parse error at position "
                             + std::to_string(position) + ": " + what),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word operations
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline Monomial star(Monomial const& v) {
    Monomial out;
    out.letters.reserve(v.size());
    for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) {
      out.letters.push_back(
          {it->kind == Kind::Iso ? Kind::CoIso : Kind::Iso, it->arg});
    }
    return out;
  }

  [[nodiscard]] inline GroupIndex index(Monomial const& v) noexcept {
    GroupIndex sum = 0;
    for (auto const& x : v.letters) {
      sum += x.kind == Kind::Iso ? x.arg : -x.arg;
    }
    return sum;
  }

  [[nodiscard]] inline Monomial concat(Monomial const& v, Monomial const& w) {
    Monomial out = v;
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
    return out;
  }

  [[nodiscard]] inline Monomial operator*(Monomial const& v,
                                          Monomial const& w) {
    return concat(v, w);
  }

  //! P(n) = T(n)T*(n).
  [[nodiscard]] inline Monomial elementary_projection(Element n) {
    return Monomial{iso(n), coiso(n)};
  }

  namespace detail {
    // The product left * right as a single letter, if one of the universal
    // rules applies. A result with arg 0 stands for the identity.
    inline bool merge(NumericalSemigroup const& s,
                      TrivialMonomial const&    left,
                      TrivialMonomial const&    right,
                      TrivialMonomial&          out) {
      if (left.kind == right.kind) {
        out = {left.kind, left.arg + right.arg};
        return true;
      }
      if (left.kind == Kind::CoIso) {
        // T*(a)T(b)
        if (s.contains(right.arg - left.arg)) {
          out = iso(right.arg - left.arg);
          return true;
        }
        if (s.contains(left.arg - right.arg)) {
          out = coiso(left.arg - right.arg);
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  //! Rewrites with T(a)T(b) = T(a+b), T*(a)T*(b) = T*(a+b), and
  //! T*(a)T(b) = T(b-a) or T*(a-b) when the difference is a member, deleting
  //! factors with argument 0, until no rule applies.
  [[nodiscard]] inline Monomial basic_reduce(Monomial const&           v,
                                             NumericalSemigroup const& s
                                             = NumericalSemigroup::perforated()) {
    std::vector<TrivialMonomial> stack;
    stack.reserve(v.size());
    for (TrivialMonomial x : v.letters) {
      if (x.arg == 0) {
        continue;
      }
      TrivialMonomial merged{};
      while (!stack.empty() && detail::merge(s, stack.back(), x, merged)) {
        stack.pop_back();
        x = merged;
        if (x.arg == 0) {
          break;
        }
      }
      if (x.arg != 0) {
        stack.push_back(x);
      }
    }
    return Monomial(std::move(stack));
  }

  [[nodiscard]] inline bool is_reduced(Monomial const&           v,
                                       NumericalSemigroup const& s
                                       = NumericalSemigroup::perforated()) {
    TrivialMonomial merged{};
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v.letters[i].arg == 0) {
        return false;
      }
      if (i + 1 < v.size()
          && detail::merge(s, v.letters[i], v.letters[i + 1], merged)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugation limit
  ////////////////////////////////////////////////////////////////////////

  //! The class of T*(a)T(b) under (a, b) ~ (a + l, b + l), with a minimal.
  struct NormalFormPair {
    Element a = 0;
    Element b = 0;

    [[nodiscard]] GroupIndex index() const noexcept {
      return b - a;
    }

    [[nodiscard]] Monomial word() const {
      return Monomial{coiso(a), iso(b)};
    }

    bool operator==(NormalFormPair const&) const = default;
  };

  struct ConjugationLimit {
    NormalFormPair pair;
    //! Least member c such that for every member c' >= c the word
    //! T*(c') V T(c') collapses to T*(c')T(c' + ind V) using only the
    //! universal rules.
    Element c_min = 0;
  };

  //! The limit of T*(c) V T(c) along the net S, computed by a right-to-left
  //! scan with a symbolic offset c.
  [[nodiscard]] inline ConjugationLimit
  conj_limit_normal_form(Monomial const&           v,
                         NumericalSemigroup const& s
                         = NumericalSemigroup::perforated()) {
    // Offsets relative to c of every running value, starting with c itself.
    std::vector<GroupIndex> offsets{0};
    GroupIndex              running = 0;
    for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) {
      running += it->kind == Kind::Iso ? it->arg : -it->arg;
      offsets.push_back(running);
    }
    GroupIndex const lowest = *std::min_element(offsets.begin(), offsets.end());

    auto collapses = [&](Element c) {
      return std::all_of(offsets.begin(), offsets.end(), [&](GroupIndex o) {
        return s.contains(c + o);
      });
    };

    // Every c at or above this bound collapses; walk down over members.
    Element const bound = std::max<Element>(s.conductor() - lowest, 0);
    Element       c_min = bound;
    for (Element c = bound - 1; c >= 0; --c) {
      if (!s.contains(c)) {
        continue;
      }
      if (!collapses(c)) {
        break;
      }
      c_min = c;
    }

    ConjugationLimit out;
    out.c_min    = c_min;
    out.pair.a   = s.min_padding(running);
    out.pair.b   = out.pair.a + running;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Every reduced word of length <= max_len with arguments in [1, arg_cap]
  //! and index 0, shortest first and lexicographic within a length.
  [[nodiscard]] inline std::vector<Monomial>
  enumerate_index_zero(std::size_t               max_len,
                       Element                   arg_cap = 6,
                       NumericalSemigroup const& s
                       = NumericalSemigroup::perforated()) {
    std::vector<TrivialMonomial> alphabet;
    for (Kind k : {Kind::Iso, Kind::CoIso}) {
      for (Element a : s.members_between(1, arg_cap)) {
        alphabet.push_back({k, a});
      }
    }
    std::vector<Monomial> out;
    std::vector<TrivialMonomial> prefix;
    TrivialMonomial              merged{};

    std::function<void(std::size_t, GroupIndex)> extend
        = [&](std::size_t remaining, GroupIndex ind) {
            if (remaining == 0) {
              if (ind == 0) {
                out.emplace_back(prefix);
              }
              return;
            }
            for (auto const& x : alphabet) {
              if (!prefix.empty()
                  && detail::merge(s, prefix.back(), x, merged)) {
                continue;
              }
              prefix.push_back(x);
              extend(remaining - 1, ind + (x.kind == Kind::Iso ? x.arg : -x.arg));
              prefix.pop_back();
            }
          };
    for (std::size_t len = 0; len <= max_len; ++len) {
      extend(len, 0);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form: "3* 2 2* 3" is T*(3)T(2)T*(2)T(3)
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline Monomial
  parse_monomial(std::string const&        text,
                 NumericalSemigroup const& s = NumericalSemigroup::perforated()) {
    Monomial    out;
    std::size_t i = 0;
    auto        is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    while (i < text.size()) {
      if (is_space(text[i])) {
        ++i;
        continue;
      }
      std::size_t const start = i;
      Element           value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        if (value > (Element{1} << 40)) {
          throw ParseError(start, "argument too large");
        }
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (i == start) {
        throw ParseError(i,
                         std::string("expected a decimal argument, found '")
                             + text[i] + "'");
      }
      Kind kind = Kind::Iso;
      if (i < text.size() && text[i] == '*') {
        kind = Kind::CoIso;
        ++i;
      }
      if (i < text.size() && !is_space(text[i])) {
        throw ParseError(i,
                         std::string("unexpected character '") + text[i] + "'");
      }
      if (!s.contains(value)) {
        throw ParseError(start,
                         std::to_string(value) + " is not in the semigroup");
      }
      out.letters.push_back({kind, value});
    }
    return out;
  }

  [[nodiscard]] inline std::string to_string(TrivialMonomial const& x) {
    return std::to_string(x.arg) + (x.kind == Kind::CoIso ? "*" : "");
  }

  [[nodiscard]] inline std::string to_string(Monomial const& v) {
    std::string out;
    for (auto const& x : v.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += to_string(x);
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Monomial const& v) {
    return os << '[' << to_string(v) << ']';
  }

}  // namespace perforated

#endif  // PERFORATED_MONOMIAL_HPP_
