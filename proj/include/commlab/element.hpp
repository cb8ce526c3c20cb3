#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "commlab/params.hpp"

namespace commlab {

  // An element of the universe of the constructed algebra A, as a finite
  // symbolic tree. There is exactly one representation per element, so
  // structural equality is element equality.
  //
  //   A(i, j)          a_{i,j}
  //   B(i, j)          b_{i,j}
  //   D(k)             d_k, 1 <= k <= 2^(n-1) + 1
  //   C                c
  //   Tagged(args, t)  the pair (args, t) adjoined at stage t + 1
  //
  // Elements are immutable and cheap to copy; Tagged children are shared.
  class Element {
   public:
    enum class Kind : std::uint8_t { A = 0, B = 1, D = 2, C = 3, Tagged = 4 };

    // Default-constructs c.
    Element() noexcept = default;

    static Element a(unsigned i, unsigned j = 0);
    static Element b(unsigned i, unsigned j = 0);
    static Element d(unsigned k);
    static Element c() noexcept {
      return Element();
    }
    // Validates tag == level(args) and that args is not in dmn(f_0).
    static Element tagged(std::vector<Element> args, unsigned tag);

    Kind kind() const noexcept {
      return kind_;
    }
    bool is_atom() const noexcept {
      return kind_ != Kind::Tagged;
    }
    // a_{i,j} or b_{i,j} for some i, j.
    bool in_B() const noexcept {
      return kind_ == Kind::A || kind_ == Kind::B;
    }
    // a_i or b_i (shift 0).
    bool in_C() const noexcept {
      return in_B() && y_ == 0;
    }

    // i of a_{i,j} / b_{i,j}.
    unsigned index() const noexcept {
      return x_;
    }
    // j of a_{i,j} / b_{i,j}.
    unsigned shift() const noexcept {
      return y_;
    }
    // k of d_k.
    unsigned d_index() const noexcept {
      return x_;
    }
    unsigned tag() const noexcept {
      return x_;
    }
    std::span<Element const> args() const noexcept;

    // Least i with the element in A_i.
    unsigned level() const noexcept {
      return kind_ == Kind::Tagged ? x_ + 1 : 0;
    }

    std::size_t hash() const noexcept;

    std::string to_string() const;

    friend bool operator==(Element const& lhs, Element const& rhs) noexcept;
    // Canonical order: atoms before Tagged; A < B < D < C; atoms
    // lexicographic on (i, j) or k; Tagged by (tag, args lexicographic).
    friend std::strong_ordering operator<=>(Element const& lhs,
                                            Element const& rhs) noexcept;

   private:
    struct Node;

    Element(Kind kind, unsigned x, unsigned y) noexcept
        : kind_(kind), x_(x), y_(y) {}

    Kind                        kind_ = Kind::C;
    unsigned                    x_    = 0;
    unsigned                    y_    = 0;
    std::shared_ptr<Node const> node_;
  };

  std::ostream& operator<<(std::ostream& os, Element const& e);

  // Stage index of the recursion: 0 for atoms, tag + 1 for Tagged.
  inline unsigned level(Element const& e) noexcept {
    return e.level();
  }
  // Maximum level over the components; 0 for an empty sequence.
  unsigned level(std::span<Element const> args) noexcept;

  // Throws DomainError unless every index in e (recursively) is in range for
  // params and every Tagged node has exactly n arguments.
  void check_well_formed(Element const& e, Params const& params);
  bool is_well_formed(Element const& e, Params const& params) noexcept;

  // True iff args[i] is a_{i+1} or b_{i+1} for every position.
  bool in_dmn_f0(std::span<Element const> args, Params const& params);

  // Value of f_0 on its domain: with bit c_i = 1 when args[i] = b_i, returns
  // d_{2^(n-1)+1} when all bits are set, and otherwise d_{k+1} where k reads
  // the first n - 1 bits as a binary number with args[0] most significant.
  Element f0_value(std::span<Element const> args, Params const& params);

  // f^A: f_0 on its domain, otherwise Tagged(args, level(args)).
  Element eval_f(std::span<Element const> args, Params const& params);

  // u^A: the cycle (a_1 b_1 a_2 b_2 ... a_n b_n c); fixes everything else.
  Element eval_u(Element const& e, Params const& params);

  // Parameter triple of a u_pqr symbol.
  struct Triple {
    Element p;
    Element q;
    Element r;

    friend bool                 operator==(Triple const&, Triple const&)
        = default;
    friend std::strong_ordering operator<=>(Triple const&, Triple const&)
        = default;
  };

  // The symbol u_pqr exists iff p, q, r are pairwise distinct and outside B.
  bool is_valid_triple(Triple const& t) noexcept;
  // Throws SignatureError if the triple does not name a symbol.
  void check_triple(Triple const& t, Params const& params);

  Element eval_u_pqr(Triple const& t, Element const& x, Params const& params);

  // {a_{i,j}, b_{i,j} : 1 <= i <= n, 0 <= j <= j_max} ∪ {d_k} ∪ {c}, in
  // canonical order.
  std::vector<Element> base_atoms(Params const& params, unsigned j_max);

  // S_0 = base_atoms(j_max), S_{t+1} = S_t ∪ f[S_t^n]; returns S_depth in
  // canonical order. Throws BudgetError when the set exceeds `cap`.
  std::vector<Element> bounded_subuniverse(Params const&  params,
                                           unsigned       j_max,
                                           unsigned       closure_depth,
                                           std::size_t    cap
                                           = Budget{}.max_elements);

  // Every valid triple over {d_1, ..., d_{2^(n-1)+1}, c}, in lexicographic
  // canonical order.
  std::vector<Triple> default_triple_pool(Params const& params);

  // Every valid triple over `elements`, in lexicographic canonical order.
  std::vector<Triple> triples_over(std::vector<Element> elements);

}  // namespace commlab

template <>
struct std::hash<commlab::Element> {
  std::size_t operator()(commlab::Element const& e) const noexcept {
    return e.hash();
  }
};
