// perforated - isometric representations of the semigroup Z+ \ {1}
//
// Command line front end. Exit status: 0 when every verdict passed, 1 when
// some verdict failed, 2 on usage, parse or spec errors.

#include <cstdint>    // for uint64_t
#include <cstdio>     // for printf
#include <fstream>    // for ifstream
#include <iomanip>    // for setprecision
#include <iostream>   // for cout, cerr
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <stdexcept>  // for exception
#include <string>     // for string

#include "CLI11.hpp"

#include "perforated.hpp"

namespace {

  using perforated::json;

  constexpr int exit_failed = 1;
  constexpr int exit_error  = 2;

  struct ScopeFlags {
    std::optional<std::size_t> window;
    std::optional<std::size_t> max_len;
    std::optional<double>      tol;
    std::uint64_t              seed = 1;
    bool                       as_json = false;

    [[nodiscard]] perforated::CheckOptions options() const {
      return {window, max_len, tol, seed};
    }
  };

  void add_scope_flags(CLI::App* cmd, ScopeFlags& flags) {
    cmd->add_option("--window", flags.window, "number of basis vectors checked");
    cmd->add_option("--max-len", flags.max_len, "word length bound");
    cmd->add_option("--tol", flags.tol, "residual tolerance");
    cmd->add_option("--seed", flags.seed, "seed for randomized checks");
    cmd->add_flag("--json", flags.as_json, "emit JSON");
  }

  perforated::Representation load_spec(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw perforated::SpecError("cannot open " + path);
    }
    json j;
    try {
      j = json::parse(in);
    } catch (json::parse_error const& e) {
      throw perforated::SpecError(path + ": " + e.what());
    }
    return perforated::representation_from_json(j);
  }

  std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
  }

  void print_verdict(perforated::CheckVerdict const& v) {
    std::cout << (v.passed ? "[PASS] " : "[FAIL] ") << v.name
              << "  (len <= " << v.scope.word_length_bound
              << ", window " << v.scope.window_size << ", tol "
              << format_double(v.scope.tolerance) << ")\n";
    if (!v.residuals.empty()) {
      std::cout << "       residuals:";
      for (double r : v.residuals) {
        std::cout << ' ' << format_double(r);
      }
      std::cout << '\n';
    }
    for (auto const& [key, value] : v.details) {
      std::cout << "       " << key << ": " << format_double(value) << '\n';
    }
    if (v.witness) {
      std::cout << "       witness: " << v.witness->monomial << " at "
                << v.witness->label << ", residual "
                << format_double(v.witness->residual) << '\n';
    }
  }

  void print_fingerprint(perforated::Fingerprint const& f) {
    std::cout << "fingerprint (window " << f.window
              << (f.stable ? "" : ", not stable") << ")\n";
    for (std::size_t i = 0; i < f.commutator_norms.size(); ++i) {
      auto const [n, m] = perforated::fingerprint_pairs[i];
      std::cout << "  ||[P(" << n << "), P(" << m
                << ")]|| = " << format_double(f.commutator_norms[i]) << '\n';
    }
    std::cout << "  ||PQ - Q|| = " << format_double(f.pq_residual) << '\n'
              << "  dim ker T*(2)T(3) = " << f.kernel_dim << '\n';
  }

  std::string signed_index(perforated::GroupIndex d) {
    return (d > 0 ? "+" : "") + std::to_string(d);
  }

  perforated::BasisLabel parse_label(std::string const& text) {
    auto const colon = text.find(':');
    try {
      if (colon == std::string::npos) {
        return {0, std::stoll(text)};
      }
      return {static_cast<std::size_t>(std::stoull(text.substr(0, colon))),
              std::stoll(text.substr(colon + 1))};
    } catch (std::exception const&) {
      throw std::invalid_argument("a label is n or branch:n, got \"" + text + "\"");
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometric representations of the semigroup Z+ \\ {1}"};
  app.require_subcommand(1);
  app.set_version_flag("--version", perforated::tool_version);

  std::string word_text;
  bool        as_json = false;

  auto* normalize = app.add_subcommand(
      "normalize", "conjugation-limit normal form T*(a)T(b) of a word");
  normalize->add_option("word", word_text, "word such as \"3 2*\"");
  normalize->add_flag("--json", as_json, "emit JSON");

  auto* index_cmd = app.add_subcommand("index", "index of a word");
  index_cmd->add_option("word", word_text, "word such as \"3 2*\"");
  index_cmd->add_flag("--json", as_json, "emit JSON");

  std::string spec_path;
  std::string label_text = "0";
  auto*       eval = app.add_subcommand("eval", "apply a word to a basis vector");
  eval->add_option("spec", spec_path, "representation spec (JSON)")->required();
  eval->add_option("word", word_text, "word such as \"2* 3\"");
  eval->add_option("--label", label_text, "basis label n or branch:n");
  eval->add_flag("--json", as_json, "emit JSON");

  ScopeFlags  flags;
  std::string check_name;
  auto*       check = app.add_subcommand("check", "run one named check");
  check->add_option("name", check_name, "check name")->required();
  check->add_option("spec", spec_path, "representation spec (JSON)")->required();
  add_scope_flags(check, flags);

  auto* report = app.add_subcommand("report", "run every check");
  report->add_option("spec", spec_path, "representation spec (JSON)")->required();
  add_scope_flags(report, flags);

  auto* fingerprint = app.add_subcommand("fingerprint", "unitary-invariant fingerprint");
  fingerprint->add_option("spec", spec_path, "representation spec (JSON)")->required();
  add_scope_flags(fingerprint, flags);

  auto* decompose = app.add_subcommand(
      "decompose", "multiplicities of pi0 and pi1 in an inverse representation");
  decompose->add_option("spec", spec_path, "representation spec (JSON)")->required();
  add_scope_flags(decompose, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize->parsed()) {
      auto const v   = perforated::parse_monomial(word_text);
      auto const lim = perforated::conj_limit_normal_form(v);
      if (as_json) {
        std::cout << json{{"word", perforated::to_string(v)},
                          {"a", lim.pair.a},
                          {"b", lim.pair.b},
                          {"index", lim.pair.index()},
                          {"c_min", lim.c_min},
                          {"normal_form", perforated::to_string(lim.pair.word())}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "word:        " << perforated::to_string(v) << '\n'
                  << "pair:        (a=" << lim.pair.a << ", b=" << lim.pair.b << ")\n"
                  << "normal form: " << perforated::to_string(lim.pair.word()) << '\n'
                  << "index:       " << signed_index(lim.pair.index()) << '\n'
                  << "c_min:       " << lim.c_min << '\n';
      }
      return 0;
    }

    if (index_cmd->parsed()) {
      auto const v = perforated::parse_monomial(word_text);
      if (as_json) {
        std::cout << json{{"word", perforated::to_string(v)},
                          {"index", perforated::index(v)}}
                         .dump()
                  << '\n';
      } else {
        std::cout << signed_index(perforated::index(v)) << '\n';
      }
      return 0;
    }

    if (eval->parsed()) {
      auto const rep   = load_spec(spec_path);
      auto const v     = perforated::parse_monomial(word_text);
      auto const label = parse_label(label_text);
      if (!perforated::is_valid_label(rep, label)) {
        throw std::invalid_argument("label " + perforated::to_string(label)
                                    + " is not a basis vector of "
                                    + perforated::describe(rep));
      }
      auto const out = perforated::apply_monomial(
          rep, v, perforated::StateVector::basis(label));
      if (as_json) {
        json amplitudes = json::array();
        for (auto const& [l, x] : out) {
          amplitudes.push_back(
              {{"label", perforated::to_string(l)}, {"value", {x.real(), x.imag()}}});
        }
        std::cout << json{{"word", perforated::to_string(v)},
                          {"input", perforated::to_string(label)},
                          {"output", amplitudes}}
                         .dump()
                  << '\n';
      } else {
        std::cout << out << '\n';
      }
      return 0;
    }

    if (check->parsed()) {
      if (!perforated::is_check_name(check_name)) {
        std::cerr << "error: unknown check \"" << check_name << "\"; expected one of";
        for (char const* name : perforated::check_names) {
          std::cerr << ' ' << name;
        }
        std::cerr << '\n';
        return exit_error;
      }
      auto const rep     = load_spec(spec_path);
      auto const verdict = perforated::run_check(check_name, rep, flags.options());
      if (flags.as_json) {
        std::cout << json(verdict).dump(2) << '\n';
      } else {
        print_verdict(verdict);
      }
      return verdict.passed ? 0 : exit_failed;
    }

    if (report->parsed()) {
      auto const rep = load_spec(spec_path);
      auto const r   = perforated::run_report(rep, flags.options());
      if (flags.as_json) {
        std::cout << json(r).dump(2) << '\n';
      } else {
        std::cout << "perforated " << r.tool_version << "  " << perforated::describe(rep)
                  << '\n';
        for (auto const& v : r.verdicts) {
          print_verdict(v);
        }
        if (r.fingerprint) {
          print_fingerprint(*r.fingerprint);
        }
        std::cout << (r.passed() ? "all checks passed" : "some checks failed") << " ("
                  << r.elapsed_ms << " ms)\n";
      }
      return r.passed() ? 0 : exit_failed;
    }

    if (fingerprint->parsed()) {
      auto const rep = load_spec(spec_path);
      perforated::validate(flags.options());
      std::size_t const window = flags.window.value_or(perforated::default_window);
      if (window < 20) {
        throw std::invalid_argument("fingerprint needs --window of at least 20");
      }
      auto const f = perforated::fingerprint(rep, window);
      if (flags.as_json) {
        std::cout << json(f).dump(2) << '\n';
      } else {
        print_fingerprint(f);
      }
      return f.stable ? 0 : exit_failed;
    }

    if (decompose->parsed()) {
      auto const rep = load_spec(spec_path);
      auto const verdict = perforated::run_check("decompose", rep, flags.options());
      if (flags.as_json) {
        std::cout << json(verdict).dump(2) << '\n';
      } else {
        print_verdict(verdict);
      }
      return verdict.passed ? 0 : exit_failed;
    }
  } catch (perforated::ParseError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return 0;
}
