#include <set>
#include <vector>

#include "commlab/enumerate.hpp"
#include "commlab/errors.hpp"
#include "commlab/term.hpp"
#include "commlab/text.hpp"
#include "doctest.h"

using namespace commlab;

namespace {

  Term x(unsigned i) {
    return Term::var(i);
  }

}  // namespace

TEST_CASE("eval_term") {
  Params const p(2);
  CHECK(eval_term(x(0), {Element::c()}, p) == Element::c());
  CHECK(eval_term(Term::u(x(0)), {Element::b(2)}, p) == Element::c());
  CHECK(eval_term(Term::f({x(0), x(1)}), {Element::b(1), Element::a(2)}, p)
        == Element::d(2));
  CHECK_THROWS_AS(eval_term(x(3), {Element::c()}, p), UnboundVariable);
  Triple const bad{Element::d(1), Element::d(1), Element::c()};
  CHECK_THROWS_AS(eval_term(Term::upqr(bad, x(0)), {Element::c()}, p),
                  SignatureError);
  CHECK_THROWS_AS(eval_term(Term::f({x(0)}), {Element::c()}, p),
                  SignatureError);
}

TEST_CASE("eval_poly") {
  Params const p(2);
  auto const   d1 = Element::d(1), d2 = Element::d(2), c = Element::c();
  CHECK(eval_poly(UnaryPolynomial::identity(), d2, p) == d2);
  std::vector<Element> aa{Element::a(1), Element::a(1)};
  CHECK(eval_poly(UnaryPolynomial::diagonal_f(p), Element::a(1), p)
        == eval_f(aa, p));
  CHECK(eval_poly(UnaryPolynomial::upqr(Triple{d1, d2, c}), d2, p) == c);
  CHECK(eval_poly(UnaryPolynomial::u(), c, p) == Element::a(1));
  CHECK(u_power(c, 5, p) == c);
  CHECK(u_power(c, 3, p) == Element::a(2));
}

TEST_CASE("enumerate_terms examples") {
  Params const p(2);
  auto const   t1 = enumerate_terms(1, 0, {}, p);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == x(0));

  auto const t2 = enumerate_terms(1, 1, {}, p);
  REQUIRE(t2.size() == 3);
  CHECK(t2[0] == x(0));
  CHECK(t2[1] == Term::u(x(0)));
  CHECK(t2[2] == Term::f({x(0), x(0)}));

  CHECK(enumerate_terms(2, 1, {}, p).size() == 8);
}

TEST_CASE("enumerated terms are distinct, sorted and within bounds") {
  Params const p(2);
  std::vector<Triple> pool{Triple{Element::d(1), Element::d(2), Element::c()},
                           Triple{Element::d(3), Element::d(1), Element::c()}};
  auto const terms = enumerate_terms(2, 2, pool, p);
  CHECK(terms.size() == count_terms(2, 2, pool.size(), p));
  std::set<Term> seen(terms.begin(), terms.end());
  CHECK(seen.size() == terms.size());
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    CHECK(terms[i] < terms[i + 1]);
    CHECK(terms[i].depth() <= terms[i + 1].depth());
  }
}

TEST_CASE("term counts") {
  Params const p(2);
  // T(d) = V + (1 + P) T(d - 1) + T(d - 1)^n.
  CHECK(count_terms(3, 0, 24, p) == 3);
  CHECK(count_terms(3, 1, 24, p) == 3 + 25 * 3 + 9);
  CHECK(count_terms(3, 2, 24, p) == 9747);
  CHECK(count_terms(2, 2, 24, p) == 4538);
  CHECK(enumerate_term_dag(3, 2, default_triple_pool(p), p).size() == 9747);
  CHECK_THROWS_AS(enumerate_terms(3, 2, default_triple_pool(p), p, 1000),
                  BudgetError);
  CHECK_THROWS_AS(enumerate_terms(0, 1, {}, p), DomainError);
}

TEST_CASE("is_power_of_u_on") {
  Params const            p(2);
  auto const              S = bounded_subuniverse(p, 0, 0);
  std::vector<Assignment> samples;
  for (auto const& a : S) {
    for (auto const& b : S) {
      samples.push_back({a, b});
    }
  }
  auto const r0 = is_power_of_u_on(x(0), samples, 4, p);
  REQUIRE(r0);
  CHECK(*r0 == std::pair{0u, 0u});
  auto const r1 = is_power_of_u_on(Term::u(Term::u(x(1))), samples, 4, p);
  REQUIRE(r1);
  CHECK(*r1 == std::pair{1u, 2u});
  CHECK_FALSE(is_power_of_u_on(Term::f({x(0), x(1)}), samples, 4, p));
  // u^5 is the identity for n = 2, so the least exponent is reported.
  Term t = x(0);
  for (int k = 0; k < 6; ++k) {
    t = Term::u(t);
  }
  auto const r6 = is_power_of_u_on(t, samples, 4, p);
  REQUIRE(r6);
  CHECK(*r6 == std::pair{0u, 1u});
}

TEST_CASE("term text round-trips") {
  Params const p(2);
  for (auto const& t : enumerate_terms(2, 2, default_triple_pool(p), p)) {
    CHECK(parse_term(t.to_string()) == t);
  }
  auto const t = parse_term(" upqr{ d(1) ; d(2) ; c }( f( x0 , u(x1) ) ) ");
  CHECK(t.to_string() == "upqr{d(1);d(2);c}(f(x0,u(x1)))");
  CHECK(parse_term("f(a(1,0), b(2,0))")
        == Term::f({Term::constant(Element::a(1)),
                    Term::constant(Element::b(2))}));
}

TEST_CASE("term parse errors") {
  CHECK_THROWS_AS(parse_term("g(x0)"), ParseError);
  CHECK_THROWS_AS(parse_term("f(x0,"), ParseError);
  CHECK_THROWS_AS(parse_term("upqr{d(1);d(1);c}(x0)"), ParseError);
  CHECK_THROWS_AS(parse_term("upqr{a(1,0);d(1);c}(x0)"), ParseError);
  CHECK_THROWS_AS(parse_term("u(x0) x1"), ParseError);
}
