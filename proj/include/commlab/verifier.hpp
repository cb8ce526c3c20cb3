#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "commlab/chain.hpp"
#include "commlab/cube.hpp"
#include "commlab/element.hpp"
#include "commlab/report.hpp"
#include "commlab/tc_search.hpp"

namespace commlab {

  // For p != q in S^n with f(p) = f(q), both must lie in dmn(f_0). Outputs
  // are bucketed, so the cost is |S|^n evaluations. Throws BudgetError if
  // |S|^n exceeds budget.max_table.
  VerificationReport check_nfequal(Params const&               params,
                                   std::vector<Element> const& S,
                                   Budget const&               budget = {});

  // Every n-cube (block length 1) over S whose vertex 1 equals all its
  // neighbours is constant.
  VerificationReport check_corner_lemma(Params const&        params,
                                        std::vector<Element> S,
                                        unsigned             max_depth,
                                        std::vector<Triple>  triple_pool,
                                        SearchOptions const& options = {});

  // Every term in n variables taking two distinct values in C on S^n is
  // u^m(x_i) on all of S^n for some i and m <= 2n.
  VerificationReport check_term_lemma(Params const&        params,
                                      std::vector<Element> S,
                                      unsigned             max_depth,
                                      std::vector<Triple>  triple_pool,
                                      SearchOptions const& options = {});

  // The n-cube of f(x_0, ..., x_{n-1}) on blocks (a_i) / (b_i) is
  // (d_1, d_1, d_2, d_2, ..., d_{2^(n-1)}, d_{2^(n-1)+1}) and fails the term
  // condition.
  VerificationReport verify_top_commutator(Params const& params);

  // Passes iff search_tc_witness at dimension n + 1 finds nothing.
  VerificationReport search_np1_failure(Params const&        params,
                                        std::vector<Element> S,
                                        unsigned             max_depth,
                                        unsigned             block_len,
                                        std::vector<Triple>  triple_pool,
                                        SearchOptions const& options = {});

  // The same search at dimension n, which passes iff it finds a witness;
  // confirms that the searcher can see a failure when one exists.
  VerificationReport search_control_witness(Params const&        params,
                                            std::vector<Element> S,
                                            unsigned             max_depth,
                                            unsigned             block_len,
                                            std::vector<Triple>  triple_pool,
                                            SearchOptions const& options = {});

  // verify_chain(simplicity_chain(p, q, r)) on `samples` seeded random
  // triples from S with p != q, plus one corrupted chain that must be
  // rejected.
  VerificationReport check_simplicity_chains(Params const&               params,
                                             std::vector<Element> const& S,
                                             unsigned                    samples,
                                             std::uint64_t               seed);

  // Bounds of the verification suite.
  struct VerifierConfig {
    unsigned n             = 2;
    unsigned j_max         = 1;
    unsigned closure_depth = 1;
    unsigned max_depth     = 2;
    unsigned block_len     = 1;
    // Empty means default_triple_pool(n).
    std::optional<std::vector<Triple>> triple_pool;
    unsigned                           chain_samples = 50;
    std::uint64_t                      seed          = 1;
    SearchOptions                      search{};

    // Defaults sized to finish in minutes: the full bounds for n = 2, base
    // atoms and a reduced triple pool for n = 3, depth 1 beyond.
    static VerifierConfig defaults_for(unsigned n);
  };

  // All checks: nfequal, corner lemma, term lemma, top commutator, the
  // (n+1)-dimensional search and its control, and the simplicity chains.
  // Budget errors propagate.
  std::vector<VerificationReport> run_paper_suite(VerifierConfig const& config);

}  // namespace commlab
