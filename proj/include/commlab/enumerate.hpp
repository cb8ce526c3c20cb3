#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commlab/element.hpp"
#include "commlab/term.hpp"

namespace commlab {

  // One node of a TermDag. Children are earlier nodes, so a node id order is
  // also a valid evaluation order.
  struct TermNode {
    Term::Kind    kind;
    std::uint32_t var;          // Var: variable index
    std::uint32_t triple;       // UPQR: index into TermDag::triples()
    std::uint32_t children;     // offset into the child array
    std::uint32_t num_children;
    std::uint32_t depth;
    std::uint64_t var_mask;     // bit v set iff x_v occurs
  };

  // Every constant-free term over {x_0, ..., x_{V-1}} up to a depth bound,
  // stored as a DAG of shared subterms. Node ids follow the canonical term
  // order: by depth, then Var < U < UPQR < F, then by parameters and
  // children lexicographically.
  class TermDag {
   public:
    std::size_t size() const noexcept {
      return nodes_.size();
    }
    TermNode const& node(std::size_t id) const noexcept {
      return nodes_[id];
    }
    std::span<std::uint32_t const> children(std::size_t id) const noexcept {
      auto const& nd = nodes_[id];
      return {child_.data() + nd.children, nd.num_children};
    }
    std::vector<Triple> const& triples() const noexcept {
      return triples_;
    }
    unsigned num_vars() const noexcept {
      return num_vars_;
    }
    unsigned max_depth() const noexcept {
      return max_depth_;
    }
    // Ids of the nodes with depth exactly d form [depth_begin(d),
    // depth_begin(d + 1)).
    std::size_t depth_begin(unsigned d) const noexcept {
      return d < depth_begin_.size() ? depth_begin_[d] : nodes_.size();
    }

    Term term(std::size_t id) const;

    friend TermDag enumerate_term_dag(unsigned                num_vars,
                                      unsigned                max_depth,
                                      std::vector<Triple>     triple_pool,
                                      Params const&           params,
                                      std::size_t             max_terms);

   private:
    std::vector<TermNode>      nodes_;
    std::vector<std::uint32_t> child_;
    std::vector<Triple>        triples_;
    std::vector<std::size_t>   depth_begin_;
    unsigned                   num_vars_  = 0;
    unsigned                   max_depth_ = 0;
  };

  // Sorts and validates the pool (SignatureError on an invalid triple) and
  // builds the DAG. Throws BudgetError if the term count exceeds max_terms
  // and DomainError if num_vars is 0 or above 64.
  TermDag enumerate_term_dag(unsigned            num_vars,
                             unsigned            max_depth,
                             std::vector<Triple> triple_pool,
                             Params const&       params,
                             std::size_t max_terms = Budget{}.max_terms);

  // The same stream as enumerate_term_dag, materialized as Terms.
  std::vector<Term> enumerate_terms(unsigned            num_vars,
                                    unsigned            max_depth,
                                    std::vector<Triple> triple_pool,
                                    Params const&       params,
                                    std::size_t max_terms = Budget{}.max_terms);

  // Number of terms of depth <= max_depth: T(0) = V and
  // T(d) = V + (1 + P) T(d-1) + T(d-1)^n. Saturates at UINT64_MAX.
  std::uint64_t count_terms(unsigned    num_vars,
                            unsigned    max_depth,
                            std::size_t pool_size,
                            Params const& params) noexcept;

}  // namespace commlab
