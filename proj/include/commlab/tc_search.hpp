#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commlab/cube.hpp"
#include "commlab/element.hpp"
#include "commlab/term.hpp"

namespace commlab {

  struct SearchOptions {
    // Worker threads; results do not depend on this.
    unsigned threads = 1;
    Budget   budget{};
  };

  // Size of the space a search covered. Every field is determined by the
  // term stream and the result, never by scheduling.
  struct SearchStats {
    // Length of the canonical term stream.
    std::uint64_t terms_enumerated = 0;
    // Prefix of the stream covered: through the hit, or all of it.
    std::uint64_t terms_scanned = 0;
    // Scanned terms whose value tables were actually searched. The others
    // are provably covered by an earlier term (same term function, an
    // injective unary outer symbol, or a block the term never reads).
    std::uint64_t terms_evaluated = 0;
    // Scanned terms times the assignments per term. Saturates at 2^64 - 1.
    std::uint64_t assignments = 0;
    std::uint64_t domain_size = 0;
  };

  struct TCSearchResult {
    std::optional<TCWitness> witness;
    SearchStats              stats;
  };

  // First (term, block assignment) in canonical order whose m-cube fails the
  // term condition: terms over m * block_len variables from the stream of
  // enumerate_terms, block tuples over `domain` (sorted canonically,
  // duplicates removed), assignments ordered lexicographically as
  // (p_1, q_1, ..., p_m, q_m).
  TCSearchResult search_tc_witness(unsigned             m,
                                   unsigned             max_depth,
                                   unsigned             block_len,
                                   std::vector<Element> domain,
                                   std::vector<Triple>  triple_pool,
                                   Params const&        params,
                                   SearchOptions const& options = {});

  // A term and block assignment whose cube has vertex 1 equal to all its
  // neighbours but is not constant.
  struct CornerViolation {
    Term                     term;
    BlockAssignment<Element> blocks;
    Cube<Element>            cube;
  };

  struct CornerSearchResult {
    std::optional<CornerViolation> violation;
    SearchStats                    stats;
    // Cubes (up to the hit) with vertex 1 equal to all its neighbours and
    // some q_j != p_j.
    std::uint64_t premises = 0;
  };

  // Searches m-cubes with block length 1 over `domain` for a counterexample
  // to "vertex 1 equal to its neighbours implies constant".
  CornerSearchResult search_corner_violation(unsigned             m,
                                             unsigned             max_depth,
                                             std::vector<Element> domain,
                                             std::vector<Triple>  triple_pool,
                                             Params const&        params,
                                             SearchOptions const& options
                                             = {});

  // A term taking two distinct values in C that is not a power of u applied
  // to one variable, on the sampled domain.
  struct TermLemmaViolation {
    Term       term;
    Assignment first;
    Assignment second;
  };

  struct TermLemmaResult {
    std::optional<TermLemmaViolation> violation;
    SearchStats                       stats;
    // Scanned terms taking at least two distinct values in C.
    std::uint64_t premises = 0;
  };

  // For every term over num_vars variables: if it takes two distinct values
  // in C on domain^num_vars, it must agree with u^m(x_i) on all of
  // domain^num_vars for some i and m <= 2n.
  TermLemmaResult scan_term_lemma(unsigned             num_vars,
                                  unsigned             max_depth,
                                  std::vector<Element> domain,
                                  std::vector<Triple>  triple_pool,
                                  Params const&        params,
                                  SearchOptions const& options = {});

}  // namespace commlab
