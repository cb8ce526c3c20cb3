#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commlab/element.hpp"

namespace commlab {

  // A syntax tree over the signature {f (n-ary), u, u_pqr} with indexed
  // variables. Const leaves embed elements and are only meaningful inside
  // unary polynomials; enumerated terms never contain them.
  class Term {
   public:
    // Declaration order is the canonical constructor order.
    enum class Kind : std::uint8_t { Var = 0, U = 1, UPQR = 2, F = 3, Const = 4 };

    // Default-constructs x0.
    Term();

    static Term var(unsigned index);
    static Term constant(Element value);
    static Term u(Term arg);
    // Throws SignatureError for an invalid triple.
    static Term upqr(Triple triple, Term arg);
    static Term f(std::vector<Term> args);

    Kind kind() const noexcept;
    unsigned var_index() const noexcept;
    Element const& value() const noexcept;
    Triple const& triple() const noexcept;
    std::span<Term const> children() const noexcept;

    // 0 for leaves, 1 + max child depth otherwise.
    unsigned depth() const noexcept;
    // Sorted, duplicate-free variable indices occurring in the term.
    std::vector<unsigned> variables() const;
    bool has_constants() const noexcept;

    std::string to_string() const;

    friend bool operator==(Term const& lhs, Term const& rhs) noexcept;
    // Canonical order: by depth, then constructor, then parameters and
    // children lexicographically.
    friend std::strong_ordering operator<=>(Term const& lhs,
                                            Term const& rhs) noexcept;

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    std::shared_ptr<Node const> node_;
  };

  std::ostream& operator<<(std::ostream& os, Term const& t);

  // Values of the variables, indexed by variable number.
  using Assignment = std::vector<Element>;

  // Throws UnboundVariable if t reads a variable the assignment lacks, and
  // SignatureError / DomainError on malformed symbols or arities.
  Element eval_term(Term const& t, Assignment const& a, Params const& params);

  // Term with exactly one free variable, x0; all other leaves are constants.
  class UnaryPolynomial {
   public:
    explicit UnaryPolynomial(Term body);

    Term const& body() const noexcept {
      return body_;
    }

    // x0 (the identity map).
    static UnaryPolynomial identity() {
      return UnaryPolynomial(Term::var(0));
    }
    // f(x0, ..., x0).
    static UnaryPolynomial diagonal_f(Params const& params);
    static UnaryPolynomial u();
    static UnaryPolynomial upqr(Triple const& t);

    friend bool operator==(UnaryPolynomial const&, UnaryPolynomial const&)
        = default;

   private:
    Term body_;
  };

  Element eval_poly(UnaryPolynomial const& g,
                    Element const&         x,
                    Params const&          params);

  // (u^A)^m(x).
  Element u_power(Element x, unsigned m, Params const& params);

  // Least (i, m), ordered by i then m, with m <= max_power and
  // t(a) = u^m(a[i]) for every sample a; nullopt if there is none. Only
  // variables bound by every sample are tried.
  std::optional<std::pair<unsigned, unsigned>>
  is_power_of_u_on(Term const&                   t,
                   std::span<Assignment const>   samples,
                   unsigned                      max_power,
                   Params const&                 params);

}  // namespace commlab
