#ifndef S1S_CLI_HPP
#define S1S_CLI_HPP

#include "s1s/s1s.hpp"
#include "s1s/testing/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace s1s::cli {

struct config {
  std::string profile = "formal";
  std::size_t depth = 16;
  std::size_t max_states = omega::default_max_states;
  std::string format = "text";
  std::uint64_t seed = 7;
};

/// "formal" or "geometric:M".
inline cantor::profile parse_profile(const std::string& text, std::size_t depth) {
  if (text == "formal") return cantor::profile::formal(depth);
  const std::string tag = "geometric:";
  if (text.rfind(tag, 0) == 0) {
    auto m = parse_rational(text.substr(tag.size()));
    if (!m || denominator_of(*m) != 1 || *m < 0 || *m > 1 << 20)
      throw precondition_violation("bad modulus in profile '" + text + "'");
    return cantor::profile::geometric(numerator_of(*m).convert_to<unsigned>(), depth);
  }
  throw precondition_violation("unknown profile '" + text + "', expected formal or geometric:M");
}

namespace detail {

inline std::string read_source(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw precondition_violation("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string approx_text(const cantor::combo& x, const cantor::profile& pr, std::size_t depth) {
  auto iv = cantor::value_approx(x, pr, depth);
  rational mid = (iv.lo + iv.hi) / 2, half = (iv.hi - iv.lo) / 2;
  return to_decimal(mid) + " ± " + to_decimal(half);
}

inline omega::dpa as_dpa(const omega::automaton& a, std::size_t max_states) {
  if (auto d = std::get_if<omega::dpa>(&a)) return *d;
  return omega::determinize(std::get<omega::nba>(a), max_states);
}

inline nlohmann::ordered_json witness_json(const mso::witness_assignment& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : w.sets) j[k] = mso::to_string(v);
  for (const auto& [k, v] : w.positions) j[k] = v;
  return j;
}

} // namespace detail

/// Runs one command line. Returns 0 on success, 1 on domain errors and
/// 2 on usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"S1S decision engine and Cantor-set kernel", "s1s"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with default flag values");
  config cfg;
  app.add_option("--profile", cfg.profile, "formal | geometric:M")->capture_default_str();
  app.add_option("--depth", cfg.depth, "maximal position depth")->capture_default_str();
  app.add_option("--max-states", cfg.max_states, "state cap for determinization and complementation")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "text | json | hoa")
      ->check(CLI::IsMember({"text", "json", "hoa"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for sampled suites")->capture_default_str();

  std::string formula_text, hoa_path, combo_text;
  bool want_dpa = false, want_nu = false, want_sign = false, want_mu = false, want_lambda = false, want_vw = false;
  std::optional<std::size_t> e_at, interval_at;
  std::string interval_kind;
  std::size_t kn_depth = 0;

  auto* decide = app.add_subcommand("decide", "decide an S1S sentence");
  decide->add_option("formula", formula_text)->required();
  auto* compile = app.add_subcommand("compile", "compile a formula and emit HOA");
  compile->add_option("formula", formula_text)->required();
  compile->add_flag("--dpa", want_dpa, "determinize before emitting");
  auto* classify = app.add_subcommand("classify", "Borel class of a formula or HOA automaton");
  auto* f_opt = classify->add_option("--formula", formula_text);
  auto* h_opt = classify->add_option("--hoa", hoa_path, "HOA file, '-' for stdin");
  f_opt->excludes(h_opt);
  classify->require_option(1);
  auto* witness = app.add_subcommand("witness", "canonical satisfying assignment");
  witness->add_option("formula", formula_text)->required();
  auto* eval = app.add_subcommand("eval", "evaluate a rational combination of Cantor points");
  eval->add_option("combo", combo_text)->required();
  eval->add_flag("--nu", want_nu, "largest Cantor point not above x");
  eval->add_flag("--sign", want_sign);
  eval->add_flag("--mu", want_mu, "first position with a nonzero digit sum");
  eval->add_flag("--lambda", want_lambda, "a with q_{a+1}^{-1} < x <= q_a^{-1}");
  eval->add_option("--e", e_at, "truncate the point at position a");
  eval->add_option("--interval", interval_kind, "complementary interval: inner | left | right")
      ->check(CLI::IsMember({"inner", "left", "right"}));
  eval->add_option("--at", interval_at, "level for --interval");
  auto* kn = app.add_subcommand("kn", "endpoints of the stage set K_n");
  kn->add_option("n", kn_depth)->required();
  kn->add_flag("--vw", want_vw, "list (r, v(r), w(r)) per gap");
  auto* selftest = app.add_subcommand("selftest", "run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    mso::compile_options opt{cfg.max_states};
    const bool json = cfg.format == "json";
    if (decide->parsed()) {
      bool v = mso::decide(*mso::parse_formula(formula_text), opt);
      if (json) out << nlohmann::ordered_json{{"result", v}}.dump() << "\n";
      else out << (v ? "true" : "false") << "\n";
    } else if (compile->parsed()) {
      auto a = mso::compile(*mso::parse_formula(formula_text), opt);
      if (want_dpa)
        out << omega::hoa_emit(omega::dpa_compact_priorities(omega::dpa_reachable(omega::determinize(a, cfg.max_states))));
      else out << omega::hoa_emit(a);
    } else if (classify->parsed()) {
      omega::dpa d;
      if (!formula_text.empty())
        d = omega::determinize(mso::compile(*mso::parse_formula(formula_text), opt), cfg.max_states);
      else d = detail::as_dpa(omega::hoa_parse(detail::read_source(hoa_path)), cfg.max_states);
      auto rep = borel::classify(omega::dpa_compact_priorities(omega::dpa_reachable(d)));
      if (json) {
        out << borel::to_json(rep).dump() << "\n";
      } else {
        out << "label: " << rep.label << "\n";
        for (auto [k, v] : {std::pair{"is_open", rep.is_open}, std::pair{"is_closed", rep.is_closed},
                            std::pair{"is_gdelta", rep.is_gdelta}, std::pair{"is_fsigma", rep.is_fsigma}})
          out << k << ": " << (v ? "true" : "false") << "\n";
      }
    } else if (witness->parsed()) {
      auto w = mso::witness(*mso::parse_formula(formula_text), opt);
      if (json) {
        out << (w ? detail::witness_json(*w) : nlohmann::ordered_json(nullptr)).dump() << "\n";
      } else if (!w) {
        out << "unsatisfiable\n";
      } else {
        for (const auto& [k, v] : w->sets) out << k << " = " << mso::to_string(v) << "\n";
        for (const auto& [k, v] : w->positions) out << k << " = " << v << "\n";
        if (w->sets.empty() && w->positions.empty()) out << "satisfiable\n";
      }
    } else if (eval->parsed()) {
      const auto pr = parse_profile(cfg.profile, cfg.depth);
      const auto x = cantor::parse_combo(combo_text);
      const bool geo = pr.is_geometric();
      nlohmann::ordered_json j;
      auto emit = [&](const std::string& key, const std::string& shown, const cantor::combo* approx) {
        if (json) {
          j[key] = shown;
          if (approx && geo) j[key + "_approx"] = detail::approx_text(*approx, pr, cfg.depth);
          return;
        }
        out << key << " = " << shown;
        if (approx && geo) out << " ≈ " << detail::approx_text(*approx, pr, cfg.depth);
        out << "\n";
      };
      bool any = want_nu || want_sign || want_mu || want_lambda || e_at || !interval_kind.empty();
      if (!any) emit("x", cantor::to_string(x), &x);
      if (want_sign) emit("sign", std::to_string(cantor::sign(x, pr)), nullptr);
      if (want_mu) {
        auto m = cantor::mu(x);
        emit("mu", m ? std::to_string(*m) : "none", nullptr);
      }
      if (want_lambda) emit("lambda", std::to_string(cantor::lambda_inv(x, pr)), nullptr);
      if (want_nu) {
        cantor::combo n(cantor::nu(x, pr));
        emit("nu", cantor::to_string(n), &n);
      }
      if (e_at || !interval_kind.empty()) {
        auto p = cantor::as_point(x);
        if (!p) throw precondition_violation("--e and --interval need a Cantor point");
        if (e_at) {
          pr.require_depth(*e_at);
          cantor::combo t(cantor::e_trunc(*e_at, *p));
          emit("e", cantor::to_string(t), &t);
        }
        if (!interval_kind.empty()) {
          if (!interval_at) throw precondition_violation("--interval needs --at");
          auto k = interval_kind == "inner"  ? cantor::interval_kind::inner
                   : interval_kind == "left" ? cantor::interval_kind::left
                                             : cantor::interval_kind::right;
          auto [lo, hi] = cantor::comp_interval(*p, *interval_at, k);
          emit("interval_lo", cantor::to_string(lo), &lo);
          emit("interval_hi", cantor::to_string(hi), &hi);
        }
      }
      if (json) out << j.dump() << "\n";
    } else if (kn->parsed()) {
      auto pr = parse_profile(cfg.profile, cfg.depth);
      if (want_vw) {
        auto rows = cantor::brute_vw(kn_depth, pr);
        if (json) {
          nlohmann::ordered_json j = nlohmann::ordered_json::array();
          for (const auto& row : rows)
            j.push_back({{"r", to_string(row.r)}, {"v", to_string(row.v)}, {"w", to_string(row.w)}});
          out << j.dump() << "\n";
        } else {
          for (const auto& row : rows)
            out << to_string(row.r) << " " << to_string(row.v) << " " << to_string(row.w) << "\n";
        }
      } else {
        auto ends = cantor::enumerate_Kn(kn_depth, pr);
        if (json) {
          nlohmann::ordered_json j = nlohmann::ordered_json::array();
          for (const auto& e : ends) j.push_back(to_string(e));
          out << j.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < ends.size(); ++i) out << (i ? " " : "") << to_string(ends[i]);
          out << "\n";
        }
      }
    } else if (selftest->parsed()) {
      std::size_t failed = 0;
      out << "selftest seed=" << cfg.seed << "\n";
      for (const auto& r : testing::run_all(cfg.seed)) {
        testing::print(out, r);
        for (const auto& p : r.properties) failed += p.failures;
      }
      out << (failed ? "selftest: " + std::to_string(failed) + " failures" : std::string("selftest: passed")) << "\n";
      return failed ? 1 : 0;
    }
  } catch (const s1s::error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace s1s::cli

#endif
