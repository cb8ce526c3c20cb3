// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commlab/commutator.hpp"
#include "commlab/cube.hpp"
#include "commlab/report.hpp"
#include "commlab/tc_search.hpp"
#include "commlab/verifier.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace commlab;

namespace {

  using clock = std::chrono::steady_clock;

  double seconds_since(clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
  }

  // Collects the reasons a criterion failed.
  struct Outcome {
    std::vector<std::string> problems;
    std::string              summary;

    void require(bool ok, std::string const& what) {
      if (!ok) {
        problems.push_back(what);
      }
    }
  };

  std::string counts_text(VerificationReport const& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.counts.size(); ++i) {
      os << (i ? " " : "") << r.counts[i].first << '=' << r.counts[i].second;
    }
    return os.str();
  }

  Term f_all(unsigned n) {
    std::vector<Term> xs;
    for (unsigned i = 0; i < n; ++i) {
      xs.push_back(Term::var(i));
    }
    return Term::f(xs);
  }

  BlockAssignment<Element> ab_blocks(unsigned n) {
    BlockAssignment<Element> b;
    for (unsigned i = 1; i <= n; ++i) {
      b.p.push_back({Element::a(i)});
      b.q.push_back({Element::b(i)});
    }
    return b;
  }

  std::vector<Element> expected_cube(unsigned n) {
    std::vector<Element> out;
    unsigned const       half = 1u << (n - 1);
    for (unsigned k = 1; k <= half; ++k) {
      out.push_back(Element::d(k));
      out.push_back(Element::d(k == half ? k + 1 : k));
    }
    return out;
  }

  Outcome exact_cubes() {
    Outcome o;
    for (unsigned n = 2; n <= 4; ++n) {
      auto const t0   = clock::now();
      auto const cube = term_cube(f_all(n), ab_blocks(n), Params(n));
      double const s  = seconds_since(t0);
      o.require(cube.vertices() == expected_cube(n),
                "cube mismatch for n = " + std::to_string(n));
      o.require(s < 1.0, "n = " + std::to_string(n) + " took over 1 s");
    }
    auto const c2 = term_cube(f_all(2), ab_blocks(2), Params(2));
    o.require(c2.vertices()
                  == std::vector<Element>{Element::d(1), Element::d(1),
                                          Element::d(2), Element::d(3)},
              "n = 2 square is not (d1, d1, d2, d3)");
    auto const c4 = term_cube(f_all(4), ab_blocks(4), Params(4));
    o.require(c4.r(15) == Element::d(8) && c4.r(16) == Element::d(9),
              "n = 4 cube does not end d8, d9");
    o.summary = "f cubes for n = 2, 3, 4";
    return o;
  }

  Outcome tc_verdicts() {
    Outcome    o;
    auto const t0 = clock::now();
    for (unsigned n = 2; n <= 4; ++n) {
      Params const p(n);
      auto const   cube = term_cube(f_all(n), ab_blocks(n), p);
      o.require(is_tc_failure(cube),
                "f cube not a failure for n = " + std::to_string(n));
      for (auto const& e : base_atoms(p, 0)) {
        Cube<Element> constant(n, std::vector<Element>(cube.size(), e));
        o.require(!is_tc_failure(constant), "constant cube reported");
      }
      auto const res = search_tc_witness(
          n, 1, 1, base_atoms(p, 0), default_triple_pool(p), p);
      o.require(res.witness && res.witness->term == f_all(n)
                    && is_tc_failure(res.witness->cube),
                "first witness is not f for n = " + std::to_string(n));
    }
    double const s = seconds_since(t0);
    o.require(s < 5.0, "took over 5 s");
    o.summary = "witness f(x0,...) first for n = 2, 3, 4";
    return o;
  }

  VerifierConfig n2_config(unsigned threads) {
    auto cfg           = VerifierConfig::defaults_for(2);
    cfg.search.threads = threads;
    return cfg;
  }

  struct Np1Run {
    VerificationReport np1;
    VerificationReport control;
  };

  Np1Run run_np1(unsigned threads) {
    auto const   cfg = n2_config(threads);
    Params const p(2);
    auto const   S = bounded_subuniverse(p, cfg.j_max, cfg.closure_depth);
    auto const   pool = default_triple_pool(p);
    return {search_np1_failure(p, S, cfg.max_depth, 1, pool, cfg.search),
            search_control_witness(p, S, cfg.max_depth, 1, pool, cfg.search)};
  }

  Outcome supernilpotence(Np1Run& first) {
    Outcome    o;
    auto const t0 = clock::now();
    first         = run_np1(1);
    double const s = seconds_since(t0);
    o.require(first.np1.passed(), "found a witness at dimension n + 1");
    o.require(first.control.passed(), "control found no witness at dimension n");
    o.require(s < 600.0, "took over 10 minutes");
    std::uint64_t domain = 0;
    for (auto const& [k, v] : first.np1.counts) {
      if (k == "domain_size") {
        domain = v;
      }
    }
    o.require(domain == 152, "S does not have 152 elements");
    o.summary = "n = 2 dimension 3 search empty (" + counts_text(first.np1)
                + "), control found a witness";
    return o;
  }

  Outcome lemmas() {
    Outcome      o;
    auto const   cfg = VerifierConfig::defaults_for(2);
    Params const p(2);
    auto const   S    = bounded_subuniverse(p, cfg.j_max, cfg.closure_depth);
    auto const   pool = default_triple_pool(p);
    auto const   nf   = check_nfequal(p, S);
    auto const   corner = check_corner_lemma(p, S, cfg.max_depth, pool);
    auto const   term   = check_term_lemma(p, S, cfg.max_depth, pool);
    Params const p3(3);
    auto const   nf3 = check_nfequal(p3, base_atoms(p3, 0));
    o.require(nf.passed(), "nfequal failed for n = 2");
    o.require(corner.passed(), "corner lemma failed for n = 2");
    o.require(term.passed(), "term lemma failed for n = 2");
    o.require(nf3.passed(), "nfequal failed for n = 3");
    o.summary = "nfequal, corner and term lemmas for n = 2; nfequal for n = 3";
    return o;
  }

  Outcome chains() {
    Outcome      o;
    auto const   t0 = clock::now();
    Params const p(2);
    auto const   S = bounded_subuniverse(p, 1, 1);
    auto const   r = check_simplicity_chains(p, S, 50, 1);
    double const s = seconds_since(t0);
    o.require(r.passed(), "a chain failed or the mutation was accepted");
    o.require(s < 10.0, "took over 10 s");
    o.summary = "50 random chains verified, mutation rejected";
    return o;
  }

  oracle::Labels labels(Congruence const& c) {
    oracle::Labels l(c.size());
    for (std::uint32_t x = 0; x < c.size(); ++x) {
      l[x] = c.block_of(x);
    }
    return oracle::normalize(l);
  }

  Outcome ground_truth() {
    Outcome o;
    using namespace fixtures;
    auto const full2 = std::vector<oracle::Labels>(2, oracle::full(2));
    // The oracle is consulted first; the engine is compared against it.
    auto const z2_oracle   = oracle::commutator(z2(), full2);
    auto const semi_oracle = oracle::commutator(semilattice2(), full2);
    auto const z4_cg       = oracle::cg(z4(), {{0, 2}});
    o.require(z2_oracle == oracle::identity(2), "oracle: Z2 not abelian");
    o.require(semi_oracle == oracle::full(2), "oracle: semilattice abelian");
    o.require(z4_cg == oracle::Labels{0, 1, 0, 1}, "oracle: Z4 cg wrong");
    o.require(!oracle::is_simple(z4()), "oracle: Z4 simple");

    std::vector<Congruence> full(2, Congruence::full(2));
    o.require(higher_commutator(z2(), full).is_identity(),
              "Z2 commutator is not the identity");
    o.require(higher_commutator(semilattice2(), full).is_full(),
              "semilattice commutator is not full");
    o.require(!is_simple(z4()), "Z4 reported simple");
    auto const theta = cg(z4(), std::vector<Pair>{{0, 2}});
    o.require(theta.to_string() == "{{0,2},{1,3}}", "Z4 cg wrong");
    o.require(labels(theta) == z4_cg, "Z4 cg disagrees with the oracle");

    std::mt19937_64 rng(6);
    std::vector<FiniteAlgebra> algebras{z2(), z4(), semilattice2(), set2(),
                                        set3(), trivial()};
    for (int k = 0; k < 40; ++k) {
      algebras.push_back(random_algebra(rng, 3, 2, 2));
    }
    for (auto const& alg : algebras) {
      // The cube count grows like s^(2^m), so m = 4 only for s <= 2.
      auto const series = central_series(alg, alg.size() <= 2 ? 4 : 3);
      for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        o.require(series[i + 1].refines(series[i]),
                  "central series not descending");
      }
    }
    o.summary = "Z2, semilattice, Z4 values match the oracle; series descend";
    return o;
  }

  Outcome oracle_equivalence() {
    Outcome         o;
    auto const      t0 = clock::now();
    std::mt19937_64 rng(20240601);
    int             agree = 0, total = 0;
    for (int k = 0; k < 120; ++k) {
      auto const alg = fixtures::random_algebra(rng, 3, 2, 2);
      std::vector<Congruence>     full(2, Congruence::full(alg.size()));
      std::vector<oracle::Labels> ofull(2, oracle::full(alg.size()));
      ++total;
      if (labels(higher_commutator(alg, full))
          == oracle::commutator(alg, ofull)) {
        ++agree;
      }
    }
    double const s = seconds_since(t0);
    o.require(agree == total, std::to_string(total - agree) + " disagreements");
    o.require(total >= 100, "fewer than 100 algebras");
    o.require(s < 300.0, "took over 5 minutes");
    o.summary = std::to_string(agree) + "/" + std::to_string(total)
                + " random algebras agree";
    return o;
  }

  Outcome determinism(Np1Run const& first) {
    Outcome o;
    auto    text = [](Np1Run const& r) {
      return to_json_line(r.np1, false) + "\n"
             + to_json_line(r.control, false) + "\n";
    };
    auto const again    = run_np1(1);
    auto const parallel = run_np1(4);
    o.require(text(first) == text(again), "two serial runs differ");
    o.require(text(first) == text(parallel), "serial and 4-thread runs differ");
    o.summary = "criterion 3 reports identical across runs and 1 or 4 threads";
    return o;
  }

}  // namespace

int main() {
  int    failures = 0;
  Np1Run first;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact cubes", exact_cubes},
      {"term-condition verdicts", tc_verdicts},
      {"supernilpotence evidence", [&] { return supernilpotence(first); }},
      {"lemma suites", lemmas},
      {"simplicity chains", chains},
      {"finite-engine ground truth", ground_truth},
      {"oracle equivalence", oracle_equivalence},
      {"determinism", [&] { return determinism(first); }},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const t0 = clock::now();
    Outcome    o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    char seconds[32];
    std::snprintf(seconds, sizeof(seconds), "%.2f s", seconds_since(t0));
    bool const ok = o.problems.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << o.summary << " [" << seconds
              << "]";
    for (auto const& p : o.problems) {
      std::cout << "; " << p;
    }
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
