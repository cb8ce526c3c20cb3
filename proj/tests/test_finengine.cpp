#include <random>
#include <string>
#include <vector>

#include "commlab/algebra_io.hpp"
#include "commlab/commutator.hpp"
#include "commlab/congruence.hpp"
#include "commlab/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace commlab;
using namespace fixtures;

namespace {

  oracle::Labels labels(Congruence const& c) {
    oracle::Labels l(c.size());
    for (std::uint32_t x = 0; x < c.size(); ++x) {
      l[x] = c.block_of(x);
    }
    return oracle::normalize(l);
  }

  // A congruence of alg generated by up to two random pairs.
  Congruence random_congruence(FiniteAlgebra const& alg, std::mt19937_64& rng) {
    std::vector<Pair> pairs;
    auto const        s = static_cast<std::uint32_t>(alg.size());
    for (int k = rng() % 3; k > 0; --k) {
      pairs.emplace_back(rng() % s, rng() % s);
    }
    return cg(alg, pairs);
  }

}  // namespace

TEST_CASE("congruence basics") {
  auto const id = Congruence::identity(3);
  CHECK(id.is_identity());
  CHECK(id.to_string() == "{{0},{1},{2}}");
  CHECK(Congruence::full(3).to_string() == "{{0,1,2}}");
  auto const c = Congruence::from_blocks(4, {{3, 1}, {2, 0}});
  CHECK(c.to_string() == "{{0,2},{1,3}}");
  CHECK(c.related(1, 3));
  CHECK_FALSE(c.related(0, 1));
  CHECK(Congruence::identity(4).refines(c));
  CHECK_FALSE(c.refines(Congruence::identity(4)));
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Congruence::from_blocks(2, {{0, 1, 2}}), DomainError);
}

TEST_CASE("cg examples") {
  CHECK(cg(set3(), {}).is_identity());
  CHECK(cg(set3(), std::vector<Pair>{{0, 1}}).to_string() == "{{0,1},{2}}");
  CHECK(cg(z2(), std::vector<Pair>{{0, 1}}).is_full());
  auto const z4_02 = cg(z4(), std::vector<Pair>{{0, 2}});
  CHECK(z4_02.to_string() == "{{0,2},{1,3}}");
  CHECK(labels(z4_02) == oracle::cg(z4(), {{0, 2}}));
  CHECK(is_compatible(z4(), z4_02));
  CHECK_FALSE(is_compatible(z4(), Congruence::from_blocks(4, {{0, 1}, {2, 3}})));
  CHECK_THROWS_AS(cg(z2(), std::vector<Pair>{{0, 2}}), DomainError);
}

TEST_CASE("cube_subpower examples") {
  auto const none2 = set2();
  std::vector<Congruence> id{Congruence::identity(2)};
  auto const c1 = cube_subpower(none2, id);
  CHECK(c1.size() == 2);
  CHECK(c1.contains(Cube<std::uint32_t>(1, {0, 0})));
  CHECK(c1.contains(Cube<std::uint32_t>(1, {1, 1})));

  std::vector<Congruence> full{Congruence::full(2)};
  CHECK(cube_subpower(none2, full).size() == 4);

  std::vector<Congruence> two(2, Congruence::full(2));
  auto const sq = cube_subpower(semilattice2(), two);
  CHECK(sq.contains(Cube<std::uint32_t>(2, {1, 0, 1, 0})));
  CHECK(sq.contains(Cube<std::uint32_t>(2, {1, 1, 0, 0})));
  CHECK(sq.contains(Cube<std::uint32_t>(2, {1, 0, 0, 0})));
  CHECK_FALSE(sq.contains(Cube<std::uint32_t>(2, {0, 1, 1, 1})));

  CHECK_THROWS_AS(cube_subpower(semilattice2(), two, 3), BudgetError);
  std::vector<Congruence> seven(7, Congruence::full(2));
  CHECK_THROWS_AS(cube_subpower(semilattice2(), seven), BudgetError);
}

TEST_CASE("higher_commutator examples") {
  std::vector<Congruence> full2(2, Congruence::full(2));
  CHECK(higher_commutator(z2(), full2).is_identity());
  CHECK(higher_commutator(semilattice2(), full2).is_full());

  std::vector<Congruence> with_zero{Congruence::full(4),
                                    Congruence::identity(4)};
  CHECK(higher_commutator(z4(), with_zero).is_identity());

  // Bounded above by each argument.
  auto const              half = cg(z4(), std::vector<Pair>{{0, 2}});
  std::vector<Congruence> args{half, Congruence::full(4)};
  CHECK(higher_commutator(z4(), args).refines(half));

  std::vector<Congruence> one{Congruence::full(2)};
  CHECK_THROWS_AS(higher_commutator(z2(), one), DomainError);
}

TEST_CASE("tc_holds examples") {
  CHECK(tc_holds(trivial(), 2, Congruence::identity(1)));
  CHECK(tc_holds(trivial(), 4, Congruence::identity(1)));
  CHECK_FALSE(tc_holds(semilattice2(), 2, Congruence::identity(2)));
  CHECK(tc_holds(semilattice2(), 2, Congruence::full(2)));
  CHECK(tc_holds(z2(), 2, Congruence::identity(2)));
  CHECK(tc_holds(z2(), 3, Congruence::identity(2)));
}

TEST_CASE("central_series examples") {
  auto const z = central_series(z2(), 4);
  REQUIRE(z.size() == 3);
  for (auto const& t : z) {
    CHECK(t.is_identity());
  }
  auto const s = central_series(semilattice2(), 3);
  REQUIRE(s.size() == 2);
  CHECK(s[0].is_full());
  CHECK(s[1].is_full());
  for (auto const& t : central_series(trivial(), 3)) {
    CHECK(t.is_identity());
    CHECK(t.is_full());
  }
}

TEST_CASE("supernilpotence_degree examples") {
  CHECK(supernilpotence_degree(z2(), 4) == 2u);
  CHECK_FALSE(supernilpotence_degree(semilattice2(), 4).has_value());
  CHECK(supernilpotence_degree(trivial(), 4) == 2u);
  CHECK(supernilpotence_degree(z4(), 3) == 2u);
}

TEST_CASE("is_simple examples") {
  CHECK(is_simple(set2()));
  CHECK(is_simple(z2()));
  CHECK(is_simple(semilattice2()));
  CHECK_FALSE(is_simple(z4()));
  CHECK_FALSE(is_simple(set3()));
  CHECK_THROWS_AS(is_simple(trivial()), DomainError);
}

TEST_CASE("named algebras agree with the oracle") {
  for (auto const& alg : {z2(), z4(), semilattice2(), set2(), set3()}) {
    std::vector<Congruence> full(2, Congruence::full(alg.size()));
    std::vector<oracle::Labels> ofull(2, oracle::full(alg.size()));
    CHECK(labels(higher_commutator(alg, full))
          == oracle::commutator(alg, ofull));
    CHECK(is_simple(alg) == oracle::is_simple(alg));
  }
  std::vector<Congruence>     full3(3, Congruence::full(2));
  std::vector<oracle::Labels> ofull3(3, oracle::full(2));
  for (auto const& alg : {z2(), semilattice2()}) {
    CHECK(labels(higher_commutator(alg, full3))
          == oracle::commutator(alg, ofull3));
  }
}

TEST_CASE("random algebras agree with the oracle") {
  std::mt19937_64 rng(2024);
  int             instances = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto const alg = random_algebra(rng, 3, 2, 2);
    ++instances;
    std::vector<Congruence> full(2, Congruence::full(alg.size()));
    std::vector<oracle::Labels> ofull(2, oracle::full(alg.size()));
    auto const                  engine = higher_commutator(alg, full);
    INFO(algebra_to_json(alg));
    CHECK(labels(engine) == oracle::commutator(alg, ofull));
    CHECK(tc_holds(alg, 2, engine));

    std::vector<Congruence> args{random_congruence(alg, rng),
                                 random_congruence(alg, rng)};
    std::vector<oracle::Labels> oargs{labels(args[0]), labels(args[1])};
    auto const                  general = higher_commutator(alg, args);
    CHECK(labels(general) == oracle::commutator(alg, oargs));
    CHECK(general.refines(args[0]));
    CHECK(general.refines(args[1]));
    CHECK(general.refines(engine));

    auto const series = central_series(alg, 3);
    CHECK(series[1].refines(series[0]));
    if (alg.size() >= 2) {
      CHECK(is_simple(alg) == oracle::is_simple(alg));
    }
  }
  CHECK(instances >= 100);
}

TEST_CASE("algebra files") {
  auto const alg = parse_algebra(
      R"({"size": 2, "operations": [{"symbol": "+", "arity": 2,
          "table": [0, 1, 1, 0]}]})");
  CHECK(alg.size() == 2);
  CHECK(alg.apply(0, std::vector<std::uint32_t>{1, 0}) == 1);
  CHECK(parse_algebra(algebra_to_json(z4())) == z4());

  auto error_text = [](std::string const& text) {
    try {
      parse_algebra(text);
    } catch (Error const& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_text(R"({"size": 2, "operations": [)").find("line 1")
        != std::string::npos);
  CHECK(error_text(R"({"size": 0, "operations": []})").find("size")
        != std::string::npos);
  auto const short_table = error_text(
      R"({"size": 2, "operations": [{"symbol": "m", "arity": 2, "table": [0, 1]}]})");
  CHECK(short_table.find("operations[0].table") != std::string::npos);
  auto const out_of_range = error_text(
      R"({"size": 2, "operations": [{"symbol": "m", "arity": 1, "table": [0, 2]}]})");
  CHECK(out_of_range.find("operations[0].table") != std::string::npos);
  CHECK_THROWS_AS(parse_algebra(R"({"size": 2})"), Error);
  CHECK_THROWS_AS(load_algebra("/nonexistent/algebra.json"), Error);
}
