// perforated - isometric representations of the semigroup Z+ \ {1}
//
// The check registry and the full suite report.

#ifndef PERFORATED_REPORT_HPP_
#define PERFORATED_REPORT_HPP_

#include <algorithm>  // for find, all_of
#include <array>      // for array
#include <chrono>     // for steady_clock
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>     // for vector

#include "json_io.hpp"
#include "representation.hpp"
#include "verifier.hpp"

namespace perforated {

  inline constexpr char const* tool_version = "0.1.0";

  //! Registry order; reports list verdicts in this order.
  inline constexpr std::array<char const*, 10> check_names{"lemma31",
                                                           "relations",
                                                           "pq",
                                                           "kernel",
                                                           "inverse",
                                                           "commute",
                                                           "cyclic",
                                                           "decompose",
                                                           "fingerprint",
                                                           "reduction"};

  //! Unset fields fall back to each check's own default scope.
  struct CheckOptions {
    std::optional<std::size_t> window;
    std::optional<std::size_t> max_len;
    std::optional<double>      tol;
    std::uint64_t              seed = 1;
  };

  [[nodiscard]] inline bool is_check_name(std::string const& name) {
    return std::find_if(check_names.begin(), check_names.end(), [&](char const* x) {
             return name == x;
           })
           != check_names.end();
  }

  inline void validate(CheckOptions const& opts) {
    if (opts.window && (*opts.window < 1 || *opts.window > 2000)) {
      throw std::invalid_argument("--window must be in [1, 2000]");
    }
    if (opts.max_len && (*opts.max_len < 2 || *opts.max_len > 16)) {
      throw std::invalid_argument("--max-len must be in [2, 16]");
    }
    if (opts.tol && !(*opts.tol > 0 && *opts.tol < 1)) {
      throw std::invalid_argument("--tol must be in (0, 1)");
    }
  }

  [[nodiscard]] inline CheckVerdict run_check(std::string const&    name,
                                              Representation const& rep,
                                              CheckOptions const&   opts = {}) {
    validate(opts);
    std::size_t const window  = opts.window.value_or(default_window);
    std::size_t const max_len = opts.max_len.value_or(default_max_len);
    double const      tol     = opts.tol.value_or(default_tolerance);

    if (name == "lemma31") {
      return check_lemma31_suite(rep, 8, window, tol);
    }
    if (name == "relations") {
      return check_obvious_relations(rep, window, tol);
    }
    if (name == "pq") {
      return check_pq(rep, window, tol);
    }
    if (name == "kernel") {
      return check_kernel(rep, window, tol);
    }
    if (name == "inverse") {
      return is_inverse_representation(rep, max_len, window, tol);
    }
    if (name == "commute") {
      return check_commute(rep, window, tol);
    }
    if (name == "cyclic") {
      auto const seed = StateVector::basis(label_at(rep, 0));
      return cyclicity_check(rep, seed, opts.max_len.value_or(8), opts.window.value_or(20));
    }
    if (name == "decompose") {
      return check_decompose(rep, window, max_len, tol);
    }
    if (name == "fingerprint") {
      if (window < 20) {
        throw std::invalid_argument("fingerprint needs --window of at least 20");
      }
      return check_fingerprint(rep, window, tol);
    }
    if (name == "reduction") {
      return check_reduction(rep, opts.seed, 100, 12, window, tol);
    }
    throw std::invalid_argument("unknown check \"" + name + "\"");
  }

  struct SuiteReport {
    std::string                tool_version;
    json                       rep_spec;
    std::vector<CheckVerdict>  verdicts;
    std::optional<Fingerprint> fingerprint;
    std::int64_t               elapsed_ms = 0;

    [[nodiscard]] bool passed() const {
      return std::all_of(verdicts.begin(), verdicts.end(), [](auto const& v) {
        return v.passed;
      });
    }

    bool operator==(SuiteReport const&) const = default;
  };

  [[nodiscard]] inline SuiteReport run_report(Representation const& rep,
                                              CheckOptions const&   opts = {}) {
    auto const  start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.tool_version = tool_version;
    report.rep_spec     = representation_to_json(rep);
    report.fingerprint = perforated::fingerprint(
        rep, std::max<std::size_t>(20, opts.window.value_or(default_window)));
    for (char const* name : check_names) {
      if (std::string_view(name) == "fingerprint") {
        report.verdicts.push_back(
            fingerprint_verdict(*report.fingerprint, opts.tol.value_or(default_tolerance)));
      } else {
        report.verdicts.push_back(run_check(name, rep, opts));
      }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  inline void to_json(json& j, SuiteReport const& r) {
    j = json{{"tool_version", r.tool_version},
             {"rep_spec", r.rep_spec},
             {"verdicts", r.verdicts},
             {"fingerprint", r.fingerprint ? json(*r.fingerprint) : json(nullptr)},
             {"elapsed_ms", r.elapsed_ms}};
  }

  inline void from_json(json const& j, SuiteReport& r) {
    j.at("tool_version").get_to(r.tool_version);
    r.rep_spec = j.at("rep_spec");
    j.at("verdicts").get_to(r.verdicts);
    if (j.at("fingerprint").is_null()) {
      r.fingerprint.reset();
    } else {
      r.fingerprint = j.at("fingerprint").get<Fingerprint>();
    }
    j.at("elapsed_ms").get_to(r.elapsed_ms);
  }

}  // namespace perforated

#endif  // PERFORATED_REPORT_HPP_
