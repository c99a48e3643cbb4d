// perforated - isometric representations of the semigroup Z+ \ {1}
//
// JSON forms of representation specs, verdicts and fingerprints.
//
//   {"variant":"pi0"}
//   {"variant":"pi1"}
//   {"variant":"tau_beta","beta":[0.6,0.0]}            t is derived
//   {"variant":"direct_sum","parts":[...],
//    "disguise":{"rotations":[[i,j,theta],...],"permutation":[...]}}

#ifndef PERFORATED_JSON_IO_HPP_
#define PERFORATED_JSON_IO_HPP_

#include <cmath>      // for abs
#include <cstddef>    // for size_t
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <variant>    // for visit

#include "json.hpp"

#include "representation.hpp"
#include "verifier.hpp"

namespace perforated {

  using json = nlohmann::json;

  //! Raised for spec documents that are well-formed JSON but not a valid
  //! representation.
  class SpecError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace detail {
    inline json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw SpecError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    inline Summand summand_from_json(json const& j) {
      auto const& variant = field(j, "variant");
      if (!variant.is_string()) {
        throw SpecError("\"variant\" must be a string");
      }
      auto const name = variant.get<std::string>();
      if (name == "pi0") {
        return Pi0{};
      }
      if (name == "pi1") {
        return Pi1{};
      }
      if (name == "tau_beta") {
        auto const& beta = field(j, "beta");
        if (!beta.is_array() || beta.size() != 2 || !beta[0].is_number()
            || !beta[1].is_number()) {
          throw SpecError("\"beta\" must be [re, im]");
        }
        Complex const b{beta[0].get<double>(), beta[1].get<double>()};
        try {
          TauBeta tau = TauBeta::from_beta(b);
          if (j.contains("t")) {
            if (!j["t"].is_number()) {
              throw SpecError("\"t\" must be a number");
            }
            tau.t = j["t"].get<double>();
          }
          validate(tau);
          return tau;
        } catch (SpecError const&) {
          throw;
        } catch (std::invalid_argument const& e) {
          throw SpecError(e.what());
        }
      }
      if (name == "direct_sum") {
        throw SpecError("direct_sum parts must be pi0, pi1 or tau_beta");
      }
      throw SpecError("unknown variant \"" + name + "\"");
    }

    inline json summand_to_json(Summand const& s) {
      return std::visit(
          overloaded{[](Pi0) { return json{{"variant", "pi0"}}; },
                     [](Pi1) { return json{{"variant", "pi1"}}; },
                     [](TauBeta const& tau) {
                       return json{{"variant", "tau_beta"},
                                   {"beta", {tau.beta.real(), tau.beta.imag()}}};
                     }},
          s);
    }

    inline std::size_t index_from_json(json const& j) {
      if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
        throw SpecError("disguise positions must be non-negative integers");
      }
      return j.get<std::size_t>();
    }
  }  // namespace detail

  [[nodiscard]] inline Representation representation_from_json(json const& j) {
    auto const& variant = detail::field(j, "variant");
    if (variant.is_string() && variant.get<std::string>() == "direct_sum") {
      DirectSum   sum;
      auto const& parts = detail::field(j, "parts");
      if (!parts.is_array() || parts.empty()) {
        throw SpecError("\"parts\" must be a non-empty array");
      }
      for (auto const& p : parts) {
        sum.parts.push_back(detail::summand_from_json(p));
      }
      if (j.contains("disguise") && !j["disguise"].is_null()) {
        auto const& d = j["disguise"];
        Disguise    u;
        if (d.contains("rotations")) {
          for (auto const& r : d["rotations"]) {
            if (!r.is_array() || r.size() != 3 || !r[2].is_number()) {
              throw SpecError("a rotation is [label_i, label_j, theta]");
            }
            u.rotations.push_back({detail::index_from_json(r[0]),
                                   detail::index_from_json(r[1]),
                                   r[2].get<double>()});
          }
        }
        if (d.contains("permutation")) {
          for (auto const& k : d["permutation"]) {
            u.permutation.push_back(detail::index_from_json(k));
          }
        }
        try {
          validate(u);
        } catch (std::invalid_argument const& e) {
          throw SpecError(e.what());
        }
        sum.disguise = std::move(u);
      }
      return sum;
    }
    return std::visit([](auto const& x) { return Representation{x}; },
                      detail::summand_from_json(j));
  }

  [[nodiscard]] inline json representation_to_json(Representation const& rep) {
    return std::visit(
        detail::overloaded{
            [](DirectSum const& sum) {
              json parts = json::array();
              for (auto const& p : sum.parts) {
                parts.push_back(detail::summand_to_json(p));
              }
              json out{{"variant", "direct_sum"}, {"parts", parts}};
              if (sum.disguise) {
                json rotations = json::array();
                for (auto const& r : sum.disguise->rotations) {
                  rotations.push_back({r.i, r.j, r.theta});
                }
                out["disguise"] = {{"rotations", rotations},
                                   {"permutation", sum.disguise->permutation}};
              }
              return out;
            },
            [](auto const& x) { return detail::summand_to_json(Summand{x}); }},
        rep.variant);
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts and fingerprints
  ////////////////////////////////////////////////////////////////////////

  inline void to_json(json& j, Scope const& s) {
    j = json{{"word_length_bound", s.word_length_bound},
             {"window_size", s.window_size},
             {"tolerance", s.tolerance}};
  }

  inline void from_json(json const& j, Scope& s) {
    j.at("word_length_bound").get_to(s.word_length_bound);
    j.at("window_size").get_to(s.window_size);
    j.at("tolerance").get_to(s.tolerance);
  }

  inline void to_json(json& j, Witness const& w) {
    j = json{{"monomial", w.monomial}, {"label", w.label}, {"residual", w.residual}};
  }

  inline void from_json(json const& j, Witness& w) {
    j.at("monomial").get_to(w.monomial);
    j.at("label").get_to(w.label);
    j.at("residual").get_to(w.residual);
  }

  inline void to_json(json& j, CheckVerdict const& v) {
    j = json{{"name", v.name},
             {"passed", v.passed},
             {"scope", v.scope},
             {"witness", v.witness ? json(*v.witness) : json(nullptr)},
             {"residuals", v.residuals},
             {"details", v.details}};
  }

  inline void from_json(json const& j, CheckVerdict& v) {
    j.at("name").get_to(v.name);
    j.at("passed").get_to(v.passed);
    j.at("scope").get_to(v.scope);
    if (j.at("witness").is_null()) {
      v.witness.reset();
    } else {
      v.witness = j.at("witness").get<Witness>();
    }
    j.at("residuals").get_to(v.residuals);
    v.details.clear();
    if (j.contains("details")) {
      j.at("details").get_to(v.details);
    }
  }

  inline void to_json(json& j, Fingerprint const& f) {
    json pairs = json::array();
    for (auto const& [n, m] : fingerprint_pairs) {
      pairs.push_back({n, m});
    }
    j = json{{"pairs", pairs},
             {"commutator_norms", f.commutator_norms},
             {"pq_residual", f.pq_residual},
             {"kernel_dim", f.kernel_dim},
             {"window", f.window},
             {"stable", f.stable}};
  }

  inline void from_json(json const& j, Fingerprint& f) {
    j.at("commutator_norms").get_to(f.commutator_norms);
    j.at("pq_residual").get_to(f.pq_residual);
    j.at("kernel_dim").get_to(f.kernel_dim);
    j.at("window").get_to(f.window);
    j.at("stable").get_to(f.stable);
  }

}  // namespace perforated

#endif  // PERFORATED_JSON_IO_HPP_
