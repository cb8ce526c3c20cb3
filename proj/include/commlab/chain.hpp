#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "commlab/element.hpp"
#include "commlab/term.hpp"

namespace commlab {

  using ElementPair = std::pair<Element, Element>;

  // One derivation step: the image of an established pair under a unary
  // polynomial. Pair 0 is the chain's source; step k establishes pair k.
  struct ChainStep {
    UnaryPolynomial polynomial;
    std::size_t     input;
    ElementPair     output;
  };

  // A derivation of (target.first, target.second) in the congruence
  // generated by the source pair: every step maps an established pair by a
  // unary polynomial, and the target is related through the symmetric,
  // transitive closure of all established pairs.
  struct MalcevChain {
    ElementPair            source;
    std::vector<ChainStep> steps;
    ElementPair            target;

    std::string to_string() const;
  };

  // A chain from (p, q) to (q', r), where q' is q, or f(q, ..., q) when p or
  // q lies in B. The construction:
  //   1. if p or q is in B, map the pair by f(x, ..., x);
  //   2. r outside B: one step by u_{p'q'r};
  //   3. r in C: establish (z, c), then apply u until c becomes r;
  //   4. r = a_{i,j} or b_{i,j} with j >= 1: reach (z, a_i) or (z, b_i) as in
  //      3, then apply u_{p1p2p3} j times.
  // The pivot z is q', or p' when q' = c (u moves c but fixes every other
  // element outside B). p1 < p2 < p3 are the three least elements of
  // {d_1, ..., c} other than z. Throws DomainError if p == q.
  MalcevChain simplicity_chain(Params const&  params,
                               Element const& p,
                               Element const& q,
                               Element const& r);

  // Re-evaluates every step and checks that the established pairs connect
  // the target's components. Never throws on a malformed chain; returns
  // false instead.
  bool verify_chain(MalcevChain const& chain, Params const& params) noexcept;

}  // namespace commlab
