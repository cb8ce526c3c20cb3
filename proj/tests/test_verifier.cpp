#include <random>
#include <string>
#include <vector>

#include "commlab/chain.hpp"
#include "commlab/errors.hpp"
#include "commlab/report.hpp"
#include "commlab/verifier.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace commlab;

namespace {

  std::uint64_t count_of(VerificationReport const& r, std::string const& key) {
    for (auto const& [k, v] : r.counts) {
      if (k == key) {
        return v;
      }
    }
    FAIL("missing count " << key);
    return 0;
  }

  std::string detail_of(VerificationReport const& r, std::string const& key) {
    for (auto const& [k, v] : r.details) {
      if (k == key) {
        return v;
      }
    }
    return {};
  }

  Element const c  = Element::c();
  Element const d1 = Element::d(1);
  Element const d2 = Element::d(2);

}  // namespace

TEST_CASE("simplicity_chain examples") {
  Params const p(2);

  auto const one = simplicity_chain(p, d1, d2, c);
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].polynomial == UnaryPolynomial::upqr(Triple{d1, d2, c}));
  CHECK(one.steps[0].output == ElementPair{d2, c});
  CHECK(one.target == ElementPair{d2, c});
  CHECK(verify_chain(one, p));

  auto const ab = simplicity_chain(p, Element::a(1), Element::b(1), d1);
  REQUIRE_FALSE(ab.steps.empty());
  CHECK(ab.steps[0].polynomial == UnaryPolynomial::diagonal_f(p));
  CHECK_FALSE(ab.steps[0].output.first.in_B());
  CHECK_FALSE(ab.steps[0].output.second.in_B());
  CHECK(verify_chain(ab, p));

  auto const to_a1 = simplicity_chain(p, d1, d2, Element::a(1));
  REQUIRE(to_a1.steps.size() == 2);
  CHECK(to_a1.steps[0].output == ElementPair{d2, c});
  CHECK(to_a1.steps[1].polynomial == UnaryPolynomial::u());
  CHECK(to_a1.steps[1].output == ElementPair{d2, Element::a(1)});
  CHECK(verify_chain(to_a1, p));

  CHECK_THROWS_AS(simplicity_chain(p, d1, d1, c), DomainError);
  CHECK_THROWS_AS(simplicity_chain(p, d1, Element::d(9), c), DomainError);
}

TEST_CASE("simplicity chains reach shifted generators") {
  Params const p(3);
  for (auto const& r : {Element::a(2, 3), Element::b(3, 1), Element::b(1, 0)}) {
    for (auto const& [x, y] : std::vector<ElementPair>{
             {d1, d2}, {c, d1}, {Element::a(1), Element::b(3)}, {d2, c}}) {
      auto const chain = simplicity_chain(p, x, y, r);
      INFO(chain.to_string());
      CHECK(verify_chain(chain, p));
      CHECK(chain.target.second == r);
    }
  }
}

TEST_CASE("verify_chain rejects corrupted chains") {
  Params const p(2);
  auto         chain = simplicity_chain(p, d1, d2, Element::a(2));
  REQUIRE(verify_chain(chain, p));

  auto bad_output              = chain;
  bad_output.steps.back().output.second = Element::d(3);
  CHECK_FALSE(verify_chain(bad_output, p));

  auto bad_input            = chain;
  bad_input.steps[0].input = 7;
  CHECK_FALSE(verify_chain(bad_input, p));

  auto bad_target          = chain;
  bad_target.target.second = Element::b(2);
  CHECK_FALSE(verify_chain(bad_target, p));

  MalcevChain empty{{d1, d2}, {}, {d2, d2}};
  CHECK(verify_chain(empty, p));
  MalcevChain direct{{d1, d2}, {}, {d1, d2}};
  CHECK(verify_chain(direct, p));
}

TEST_CASE("random simplicity chains verify") {
  Params const p(2);
  auto const   S = bounded_subuniverse(p, 1, 1);
  auto const   r = check_simplicity_chains(p, S, 200, 99);
  CHECK(r.passed());
  CHECK(count_of(r, "chains") == 200);
  CHECK(count_of(r, "mutations_rejected") == 1);
}

TEST_CASE("check_nfequal") {
  Params const p(2);
  auto const   base = check_nfequal(p, bounded_subuniverse(p, 0, 0));
  CHECK(base.passed());
  CHECK(count_of(base, "tuples") == 64);
  // Only d_1 has two preimages.
  CHECK(count_of(base, "repeated_outputs") == 1);
  CHECK(check_nfequal(p, bounded_subuniverse(p, 1, 0)).passed());
  auto const only_c = check_nfequal(p, {c});
  CHECK(only_c.passed());
  CHECK(count_of(only_c, "tuples") == 1);
  Budget tight;
  tight.max_table = 10;
  CHECK_THROWS_AS(check_nfequal(p, bounded_subuniverse(p, 0, 0), tight),
                  BudgetError);
  Params const p3(3);
  CHECK(check_nfequal(p3, base_atoms(p3, 0)).passed());
}

TEST_CASE("verify_top_commutator for n = 2..5") {
  for (unsigned n = 2; n <= 5; ++n) {
    auto const r = verify_top_commutator(Params(n));
    CHECK(r.passed());
    CHECK(count_of(r, "vertices") == (std::uint64_t{1} << n));
  }
  CHECK(detail_of(verify_top_commutator(Params(2)), "cube")
        == "[d(1),d(1),d(2),d(3)]");
  CHECK(detail_of(verify_top_commutator(Params(3)), "cube")
        == "[d(1),d(1),d(2),d(2),d(3),d(3),d(4),d(5)]");
}

TEST_CASE("lemma checks on small spaces") {
  Params const p(2);
  auto const   S    = bounded_subuniverse(p, 0, 0);
  auto const   pool = triples_over({d1, d2, c});
  CHECK(check_corner_lemma(p, S, 2, pool).passed());
  CHECK(check_term_lemma(p, S, 2, pool).passed());
  auto const np1 = search_np1_failure(p, S, 2, 1, pool);
  CHECK(np1.passed());
  CHECK_FALSE(np1.counterexample);
  auto const control = search_control_witness(p, S, 1, 1, pool);
  CHECK(control.passed());
  CHECK(detail_of(control, "witness").rfind("term=f(x0,x1)", 0) == 0);
  CHECK(search_np1_failure(p, {c}, 2, 1, pool).passed());
  CHECK_FALSE(search_control_witness(p, {c}, 1, 1, pool).passed());
}

TEST_CASE("run_paper_suite with depth 0") {
  auto cfg      = VerifierConfig::defaults_for(2);
  cfg.max_depth = 0;
  auto const reports = run_paper_suite(cfg);
  REQUIRE(reports.size() == 7);
  for (auto const& r : reports) {
    INFO(r.name);
    CHECK(r.passed());
  }
  CHECK(count_of(reports[1], "terms_enumerated") == 2);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.name   = "demo";
  r.params = {{"n", 2}, {"max_depth", 1}};
  r.counts = {{"tuples", 64}};
  r.details = {{"note", "a \"quoted\" value"}};
  r.millis = 12;
  auto const line = to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  auto const j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) {
    keys.push_back(it.key());
  }
  CHECK(keys
        == std::vector<std::string>{"name", "params", "outcome",
                                    "counterexample", "counts", "details",
                                    "millis"});
  CHECK(j["outcome"] == "pass");
  CHECK(j["counterexample"].is_null());
  CHECK(j["details"]["note"] == "a \"quoted\" value");
  CHECK(to_json_line(r, false).find("millis") == std::string::npos);

  r.fail("x0");
  auto const failed = nlohmann::json::parse(to_json_line(r));
  CHECK(failed["outcome"] == "fail");
  CHECK(failed["counterexample"] == "x0");
  CHECK(to_text(r).rfind("FAIL demo (n=2, max_depth=1)", 0) == 0);
}
