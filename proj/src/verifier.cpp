#include "commlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <unordered_map>

#include "commlab/enumerate.hpp"

namespace commlab {

  namespace {

    using Clock = std::chrono::steady_clock;

    std::int64_t millis_since(Clock::time_point start) {
      return std::chrono::duration_cast<std::chrono::milliseconds>(
                 Clock::now() - start)
          .count();
    }

    std::string tuple_text(std::vector<Element> const& t) {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i ? "," : "") << t[i];
      }
      os << ')';
      return os.str();
    }

    std::string blocks_text(BlockAssignment<Element> const& b) {
      std::ostringstream os;
      for (unsigned j = 0; j < b.dim(); ++j) {
        os << (j ? " " : "") << "p" << j + 1 << "=" << tuple_text(b.p[j])
           << " q" << j + 1 << "=" << tuple_text(b.q[j]);
      }
      return os.str();
    }

    std::string cube_text(Cube<Element> const& c) {
      std::ostringstream os;
      os << '[';
      for (std::size_t i = 0; i < c.size(); ++i) {
        os << (i ? "," : "") << c.vertices()[i];
      }
      os << ']';
      return os.str();
    }

    void add_stats(VerificationReport& r, SearchStats const& st) {
      r.counts.emplace_back("domain_size", st.domain_size);
      r.counts.emplace_back("terms_enumerated", st.terms_enumerated);
      r.counts.emplace_back("terms_scanned", st.terms_scanned);
      r.counts.emplace_back("terms_evaluated", st.terms_evaluated);
      r.counts.emplace_back("assignments", st.assignments);
    }

    std::string witness_text(TCWitness const& w) {
      return "term=" + w.term.to_string() + " " + blocks_text(w.blocks)
             + " cube=" + cube_text(w.cube);
    }

    VerificationReport tc_report(char const*          name,
                                 Params const&        params,
                                 unsigned             m,
                                 std::vector<Element> S,
                                 unsigned             max_depth,
                                 unsigned             block_len,
                                 std::vector<Triple>  pool,
                                 SearchOptions const& options,
                                 bool                 expect_witness) {
      auto               start = Clock::now();
      VerificationReport r;
      r.name   = name;
      r.params = {{"n", params.n()},
                  {"m", m},
                  {"max_depth", max_depth},
                  {"block_len", block_len},
                  {"triple_pool", static_cast<std::int64_t>(pool.size())}};
      auto result = search_tc_witness(
          m, max_depth, block_len, std::move(S), std::move(pool), params,
          options);
      add_stats(r, result.stats);
      if (result.witness) {
        r.details.emplace_back("witness", witness_text(*result.witness));
        if (!expect_witness) {
          r.fail(witness_text(*result.witness));
        }
      } else if (expect_witness) {
        r.fail("no witness found at dimension " + std::to_string(m));
      }
      r.millis = millis_since(start);
      return r;
    }

  }  // namespace

  VerificationReport check_nfequal(Params const&               params,
                                   std::vector<Element> const& S,
                                   Budget const&               budget) {
    auto               start = Clock::now();
    VerificationReport r;
    r.name   = "nfequal";
    r.params = {{"n", params.n()}};
    unsigned const n     = params.n();
    std::size_t    total = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (!S.empty() && total > budget.max_table / S.size()) {
        throw BudgetError("nfequal would scan more than "
                          + std::to_string(budget.max_table) + " tuples");
      }
      total *= S.size();
    }
    if (S.empty()) {
      total = 0;
    }
    // Output -> first tuple (as a point index) reaching it.
    std::unordered_map<Element, std::size_t> first;
    std::uint64_t                            collisions = 0;
    std::vector<Element>                     args(n);
    auto decode = [&](std::size_t point) {
      std::vector<Element> t(n);
      for (unsigned i = n; i-- > 0;) {
        t[i] = S[point % S.size()];
        point /= S.size();
      }
      return t;
    };
    for (std::size_t point = 0; point < total; ++point) {
      std::size_t rest = point;
      for (unsigned i = n; i-- > 0;) {
        args[i] = S[rest % S.size()];
        rest /= S.size();
      }
      Element value = eval_f(args, params);
      auto [it, fresh] = first.emplace(value, point);
      if (fresh) {
        continue;
      }
      ++collisions;
      auto other = decode(it->second);
      if (!in_dmn_f0(args, params) || !in_dmn_f0(other, params)) {
        if (r.passed()) {
          r.fail("f" + tuple_text(other) + " = f" + tuple_text(args) + " = "
                 + value.to_string());
        }
      }
    }
    r.counts.emplace_back("domain_size", S.size());
    r.counts.emplace_back("tuples", total);
    r.counts.emplace_back("distinct_outputs", first.size());
    // Tuples whose output was already reached by an earlier tuple.
    r.counts.emplace_back("repeated_outputs", collisions);
    r.millis = millis_since(start);
    return r;
  }

  VerificationReport check_corner_lemma(Params const&        params,
                                        std::vector<Element> S,
                                        unsigned             max_depth,
                                        std::vector<Triple>  pool,
                                        SearchOptions const& options) {
    auto               start = Clock::now();
    VerificationReport r;
    r.name   = "corner_lemma";
    r.params = {{"n", params.n()},
                {"m", params.n()},
                {"max_depth", max_depth},
                {"triple_pool", static_cast<std::int64_t>(pool.size())}};
    auto result = search_corner_violation(
        params.n(), max_depth, std::move(S), std::move(pool), params, options);
    add_stats(r, result.stats);
    r.counts.emplace_back("premises", result.premises);
    if (result.violation) {
      auto const& v = *result.violation;
      r.fail("term=" + v.term.to_string() + " " + blocks_text(v.blocks)
             + " cube=" + cube_text(v.cube));
    }
    r.millis = millis_since(start);
    return r;
  }

  VerificationReport check_term_lemma(Params const&        params,
                                      std::vector<Element> S,
                                      unsigned             max_depth,
                                      std::vector<Triple>  pool,
                                      SearchOptions const& options) {
    auto               start = Clock::now();
    VerificationReport r;
    r.name   = "term_lemma";
    r.params = {{"n", params.n()},
                {"num_vars", params.n()},
                {"max_depth", max_depth},
                {"triple_pool", static_cast<std::int64_t>(pool.size())}};
    auto result = scan_term_lemma(
        params.n(), max_depth, std::move(S), std::move(pool), params, options);
    add_stats(r, result.stats);
    r.counts.emplace_back("premises", result.premises);
    if (result.violation) {
      auto const& v = *result.violation;
      r.fail("term=" + v.term.to_string() + " at " + tuple_text(v.first)
             + " and " + tuple_text(v.second));
    }
    r.millis = millis_since(start);
    return r;
  }

  VerificationReport verify_top_commutator(Params const& params) {
    auto               start = Clock::now();
    unsigned const     n     = params.n();
    VerificationReport r;
    r.name   = "top_commutator";
    r.params = {{"n", n}, {"m", n}};

    std::vector<Term>        vars;
    BlockAssignment<Element> blocks;
    for (unsigned i = 0; i < n; ++i) {
      vars.push_back(Term::var(i));
      blocks.p.push_back({Element::a(i + 1)});
      blocks.q.push_back({Element::b(i + 1)});
    }
    Term          f    = Term::f(std::move(vars));
    Cube<Element> cube = term_cube(f, blocks, params);

    std::vector<Element> expected;
    std::size_t const    count = std::size_t{1} << n;
    for (std::size_t v = 0; v < count; ++v) {
      expected.push_back(v + 1 == count ? Element::d(params.num_d())
                                        : Element::d(unsigned(v >> 1) + 1));
    }
    Cube<Element> want(n, std::move(expected));
    r.counts.emplace_back("vertices", count);
    r.details.emplace_back("cube", cube_text(cube));
    if (cube != want) {
      r.fail("cube " + cube_text(cube) + " differs from expected "
             + cube_text(want));
    } else if (!is_tc_failure(cube)) {
      r.fail("cube " + cube_text(cube) + " does not fail the term condition");
    }
    r.millis = millis_since(start);
    return r;
  }

  VerificationReport search_np1_failure(Params const&        params,
                                        std::vector<Element> S,
                                        unsigned             max_depth,
                                        unsigned             block_len,
                                        std::vector<Triple>  pool,
                                        SearchOptions const& options) {
    return tc_report("np1_failure", params, params.n() + 1, std::move(S),
                     max_depth, block_len, std::move(pool), options, false);
  }

  VerificationReport search_control_witness(Params const&        params,
                                            std::vector<Element> S,
                                            unsigned             max_depth,
                                            unsigned             block_len,
                                            std::vector<Triple>  pool,
                                            SearchOptions const& options) {
    return tc_report("np1_control", params, params.n(), std::move(S),
                     max_depth, block_len, std::move(pool), options, true);
  }

  VerificationReport check_simplicity_chains(Params const&               params,
                                             std::vector<Element> const& S,
                                             unsigned      samples,
                                             std::uint64_t seed) {
    auto               start = Clock::now();
    VerificationReport r;
    r.name   = "simplicity_chains";
    r.params = {{"n", params.n()},
                {"samples", samples},
                {"seed", static_cast<std::int64_t>(seed)}};
    if (S.size() < 2) {
      throw DomainError("simplicity chains need at least two elements");
    }
    // Reduction modulo the size keeps the draws identical on every
    // standard library, unlike the distribution classes.
    std::mt19937_64 rng(seed);
    auto            draw = [&] { return S[rng() % S.size()]; };
    std::uint64_t   steps = 0;
    std::optional<MalcevChain> sample;
    for (unsigned k = 0; k < samples; ++k) {
      Element p = draw();
      Element q = draw();
      while (q == p) {
        q = draw();
      }
      Element     target = draw();
      MalcevChain chain  = simplicity_chain(params, p, q, target);
      steps += chain.steps.size();
      if (!verify_chain(chain, params) && r.passed()) {
        r.fail("p=" + p.to_string() + " q=" + q.to_string()
               + " r=" + target.to_string() + ": " + chain.to_string());
      }
      if (!sample && !chain.steps.empty()) {
        sample = std::move(chain);
      }
    }
    // Mutation test: corrupt one output pair; the verifier must notice.
    bool rejected = false;
    if (sample) {
      MalcevChain bad        = *sample;
      auto&       out        = bad.steps.back().output;
      out.second             = out.second == Element::c() ? Element::d(1)
                                                          : Element::c();
      rejected               = !verify_chain(bad, params);
      if (!rejected && r.passed()) {
        r.fail("corrupted chain accepted: " + bad.to_string());
      }
    } else if (r.passed()) {
      r.fail("no chain with steps was sampled for the mutation test");
    }
    r.counts.emplace_back("chains", samples);
    r.counts.emplace_back("steps", steps);
    r.counts.emplace_back("mutations_rejected", rejected ? 1 : 0);
    r.millis = millis_since(start);
    return r;
  }

  VerifierConfig VerifierConfig::defaults_for(unsigned n) {
    VerifierConfig c;
    c.n = n;
    if (n == 2) {
      return c;
    }
    c.j_max         = 0;
    c.closure_depth = 0;
    if (n == 3) {
      c.max_depth   = 2;
      c.triple_pool = std::vector<Triple>{};
    } else {
      c.max_depth = 1;
    }
    return c;
  }

  std::vector<VerificationReport> run_paper_suite(VerifierConfig const& config) {
    Params const params(config.n);
    auto const   S    = bounded_subuniverse(params,
                                       config.j_max,
                                       config.closure_depth,
                                       config.search.budget.max_elements);
    auto const   pool = config.triple_pool.value_or(default_triple_pool(params));

    std::vector<VerificationReport> out;
    out.push_back(check_nfequal(params, S, config.search.budget));
    out.push_back(check_corner_lemma(
        params, S, config.max_depth, pool, config.search));
    out.push_back(
        check_term_lemma(params, S, config.max_depth, pool, config.search));
    out.push_back(verify_top_commutator(params));
    out.push_back(search_np1_failure(
        params, S, config.max_depth, config.block_len, pool, config.search));
    // The control needs at least one operation symbol to have anything to
    // find, so depth 0 is lifted to 1.
    out.push_back(search_control_witness(params,
                                         S,
                                         std::max(config.max_depth, 1u),
                                         config.block_len,
                                         pool,
                                         config.search));
    out.push_back(
        check_simplicity_chains(params, S, config.chain_samples, config.seed));

    for (auto& r : out) {
      r.params.insert(r.params.begin() + 1,
                      {{"j_max", config.j_max},
                       {"closure_depth", config.closure_depth}});
    }
    return out;
  }

}  // namespace commlab
