// Command-line front end.
//
//   commlab paper-verify [--n N] [bounds...]   run the verification suite
//   commlab eval --n N EXPR                     evaluate a closed term
//   commlab fin commutator|series|simple|tc FILE|-
//
// Exit status: 0 pass, 1 check failure, 2 resource or usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commlab/algebra_io.hpp"
#include "commlab/commutator.hpp"
#include "commlab/errors.hpp"
#include "commlab/report.hpp"
#include "commlab/term.hpp"
#include "commlab/text.hpp"
#include "commlab/verifier.hpp"

namespace {

  using commlab::VerificationReport;

  constexpr int kPass  = 0;
  constexpr int kFail  = 1;
  constexpr int kUsage = 2;

  struct Output {
    std::string format = "text";
    std::string path;
    bool        timing = true;
  };

  std::optional<std::size_t> env_budget() {
    char const* v = std::getenv("COMMLAB_BUDGET");
    if (v == nullptr || *v == '\0') {
      return std::nullopt;
    }
    try {
      std::size_t pos = 0;
      auto        cap = std::stoull(v, &pos);
      if (pos != std::string(v).size() || cap == 0) {
        throw std::invalid_argument(v);
      }
      return cap;
    } catch (std::exception const&) {
      throw commlab::DomainError(std::string("COMMLAB_BUDGET must be a "
                                             "positive integer, got '")
                                 + v + "'");
    }
  }

  // --budget beats COMMLAB_BUDGET beats the library defaults.
  commlab::Budget resolve_budget(std::optional<std::size_t> flag) {
    if (flag) {
      return commlab::Budget::from_cap(*flag);
    }
    if (auto env = env_budget()) {
      return commlab::Budget::from_cap(*env);
    }
    return {};
  }

  void emit(std::vector<VerificationReport> const& reports, Output const& out) {
    std::ostringstream os;
    for (auto const& r : reports) {
      if (out.format == "json") {
        os << commlab::to_json_line(r, out.timing) << '\n';
      } else {
        os << commlab::to_text(r, out.timing);
      }
    }
    if (out.path.empty() || out.path == "-") {
      std::cout << os.str() << std::flush;
      return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
      throw commlab::DomainError("cannot open '" + out.path + "' for writing");
    }
    file << os.str();
  }

  // "0,2|1,3" -> {{0,2},{1,3}}
  commlab::Congruence parse_partition(std::string const& text, std::size_t s) {
    std::vector<std::vector<std::uint32_t>> blocks;
    std::stringstream                       ss(text);
    std::string                             block;
    while (std::getline(ss, block, '|')) {
      std::vector<std::uint32_t> b;
      std::stringstream          bs(block);
      std::string                item;
      while (std::getline(bs, item, ',')) {
        try {
          std::size_t pos = 0;
          auto        x   = std::stoul(item, &pos);
          if (pos != item.size()) {
            throw std::invalid_argument(item);
          }
          b.push_back(static_cast<std::uint32_t>(x));
        } catch (std::exception const&) {
          throw commlab::DomainError("bad partition '" + text
                                     + "': expected blocks like 0,2|1,3");
        }
      }
      blocks.push_back(std::move(b));
    }
    return commlab::Congruence::from_blocks(s, std::move(blocks));
  }

  struct VerifyArgs {
    unsigned                   n = 2;
    std::optional<unsigned>    j_max, closure_depth, max_depth, block_len,
        samples;
    std::optional<std::size_t> budget;
    std::uint64_t              seed    = 1;
    unsigned                   threads = 1;
  };

  int run_paper_verify(VerifyArgs const& a, Output const& out) {
    // Validates n before the defaults are looked up.
    commlab::Params const params(a.n);
    auto cfg = commlab::VerifierConfig::defaults_for(params.n());
    if (a.j_max) {
      cfg.j_max = *a.j_max;
    }
    if (a.closure_depth) {
      cfg.closure_depth = *a.closure_depth;
    }
    if (a.max_depth) {
      cfg.max_depth = *a.max_depth;
    }
    if (a.block_len) {
      cfg.block_len = *a.block_len;
    }
    if (a.samples) {
      cfg.chain_samples = *a.samples;
    }
    cfg.seed           = a.seed;
    cfg.search.threads = a.threads;
    cfg.search.budget  = resolve_budget(a.budget);

    auto reports = commlab::run_paper_suite(cfg);
    emit(reports, out);
    for (auto const& r : reports) {
      if (!r.passed()) {
        return kFail;
      }
    }
    return kPass;
  }

  int run_eval(unsigned n, std::string const& expr) {
    commlab::Params const params(n);
    auto const            t = commlab::parse_term(expr);
    std::cout << commlab::eval_term(t, {}, params).to_string() << '\n';
    return kPass;
  }

  struct FinArgs {
    std::string                file;
    unsigned                   m     = 2;
    unsigned                   max_m = 3;
    std::vector<std::string>   alphas;
    std::string                delta;
    std::optional<std::size_t> budget;
  };

  int run_fin(std::string const& what, FinArgs const& a, Output const& out) {
    using clock     = std::chrono::steady_clock;
    auto const t0   = clock::now();
    auto const alg  = commlab::load_algebra(a.file);
    auto const cap  = resolve_budget(a.budget).max_cubes;
    auto const s    = alg.size();
    std::string text;

    VerificationReport r;
    r.name = "fin_" + what;
    r.counts.emplace_back("size", s);
    r.counts.emplace_back("operations", alg.operations().size());

    if (what == "commutator") {
      std::vector<commlab::Congruence> alphas;
      for (auto const& p : a.alphas) {
        alphas.push_back(parse_partition(p, s));
      }
      if (alphas.empty()) {
        alphas.assign(a.m, commlab::Congruence::full(s));
      }
      r.params.emplace_back("m", static_cast<std::int64_t>(alphas.size()));
      bool general = false;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        general = general || !alphas[i].is_full();
        r.details.emplace_back("alpha_" + std::to_string(i + 1),
                               alphas[i].to_string());
      }
      auto const res = commlab::higher_commutator(alg, alphas, cap);
      r.details.emplace_back("commutator", res.to_string());
      if (general) {
        r.details.emplace_back("kind", "term-condition commutator");
      }
      text = res.to_string() + '\n';
    } else if (what == "series") {
      r.params.emplace_back("max_m", a.max_m);
      auto const series = commlab::central_series(alg, a.max_m, cap);
      for (std::size_t i = 0; i < series.size(); ++i) {
        auto key = "theta_" + std::to_string(i + 2);
        r.details.emplace_back(key, series[i].to_string());
        text += key + " = " + series[i].to_string() + '\n';
      }
      auto const deg = commlab::supernilpotence_degree(series);
      auto const d   = deg ? std::to_string(*deg) : std::string("none");
      r.details.emplace_back("supernilpotence_degree", d);
      text += "supernilpotence degree: " + d + '\n';
    } else if (what == "simple") {
      bool const simple = commlab::is_simple(alg);
      r.details.emplace_back("simple", simple ? "true" : "false");
      text = simple ? "true\n" : "false\n";
    } else {
      auto const delta = a.delta.empty() ? commlab::Congruence::identity(s)
                                         : parse_partition(a.delta, s);
      r.params.emplace_back("m", a.m);
      bool const holds = commlab::tc_holds(alg, a.m, delta, cap);
      r.details.emplace_back("delta", delta.to_string());
      r.details.emplace_back("holds", holds ? "true" : "false");
      text = holds ? "true\n" : "false\n";
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   clock::now() - t0)
                   .count();

    if (out.format == "json" || !out.path.empty()) {
      emit({r}, out);
    } else {
      std::cout << text << std::flush;
    }
    return kPass;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher commutators and the verification suite for the "
               "constructed simple algebra."};
  app.require_subcommand(1);

  Output out;
  auto   add_output = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out.path, "Write reports to this file");
    sub->add_flag("--timing,!--no-timing", out.timing,
                  "Omit wall-clock times from reports");
  };

  VerifyArgs va;
  auto*      verify = app.add_subcommand("paper-verify",
                                    "Run the bounded verification suite");
  verify->add_option("--n", va.n, "Parameter n >= 2");
  verify->add_option("--j-max", va.j_max, "Largest shift in the atom set");
  verify->add_option("--closure-depth", va.closure_depth,
                     "Closure rounds used to build S");
  verify->add_option("--max-depth", va.max_depth, "Term depth bound");
  verify->add_option("--block-len", va.block_len,
                     "Length of each block of the cube search");
  verify->add_option("--samples", va.samples, "Random simplicity chains");
  verify->add_option("--budget", va.budget,
                     "Resource cap, overrides COMMLAB_BUDGET")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Seed for the chain samples");
  verify->add_option("--threads", va.threads, "Worker threads for searches")
      ->check(CLI::PositiveNumber);
  add_output(verify);

  unsigned    eval_n = 2;
  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a closed term in A");
  eval->add_option("--n", eval_n, "Parameter n >= 2");
  eval->add_option("expression", expr, "Term text, e.g. f(a(1,0), b(2,0))")
      ->required();

  FinArgs     fa;
  std::string fin_what;
  auto*       fin = app.add_subcommand("fin", "Finite-algebra engine");
  fin->add_option("command", fin_what, "commutator, series, simple or tc")
      ->required()
      ->check(CLI::IsMember({"commutator", "series", "simple", "tc"}));
  fin->add_option("file", fa.file, "Algebra JSON file, or - for stdin")
      ->required();
  fin->add_option("--m", fa.m, "Commutator arity or term-condition dimension")
      ->check(CLI::Range(2u, 16u));
  fin->add_option("--max-m", fa.max_m, "Last index of the central series")
      ->check(CLI::Range(2u, 16u));
  fin->add_option("--alpha", fa.alphas,
                  "Commutator argument as blocks 0,2|1,3 (repeat per "
                  "argument; default m copies of the full congruence)");
  fin->add_option("--delta", fa.delta,
                  "Congruence for tc, as blocks (default identity)");
  fin->add_option("--budget", fa.budget,
                  "Resource cap, overrides COMMLAB_BUDGET")
      ->check(CLI::PositiveNumber);
  add_output(fin);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) {
      return run_paper_verify(va, out);
    }
    if (*eval) {
      return run_eval(eval_n, expr);
    }
    return run_fin(fin_what, fa, out);
  } catch (commlab::BudgetError const& e) {
    std::cerr << "commlab: budget exhausted: " << e.what() << '\n';
  } catch (commlab::ParseError const& e) {
    std::cerr << "commlab: parse error: " << e.what() << '\n';
  } catch (commlab::Error const& e) {
    std::cerr << "commlab: " << e.what() << '\n';
  } catch (std::exception const& e) {
    std::cerr << "commlab: " << e.what() << '\n';
  }
  return kUsage;
}
