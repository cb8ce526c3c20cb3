#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "commlab/element_pool.hpp"
#include "commlab/enumerate.hpp"

namespace commlab::detail {

  // Value tables of the terms of a TermDag over domain^V, where V is the
  // number of variables of the DAG. Points are indexed in mixed radix with
  // x_0 most significant, and domain positions follow the canonical
  // element order.
  //
  // Tables of the non-root layers (depth < max_depth) are computed once
  // over each term's own variables and cached. While caching, a term whose
  // table repeats an earlier term's table over the same variables is marked
  // redundant, as is every term with a redundant child. A redundant term
  // always has a canonically earlier term with the same term function,
  // which is what lets searches for a first witness skip it.
  class TermTables {
   public:
    TermTables(TermDag const&              dag,
               std::vector<Element> const& domain,
               Params const&               params,
               Budget const&               budget);

    TermDag const& dag() const noexcept {
      return dag_;
    }
    // Holds every element reached by the cached tables. Workers copy it.
    ElementPool const& pool() const noexcept {
      return pool_;
    }
    std::vector<ElemId> const& domain_ids() const noexcept {
      return domain_ids_;
    }
    std::size_t domain_size() const noexcept {
      return domain_ids_.size();
    }
    // Number of points of domain^V.
    std::size_t num_points() const noexcept {
      return num_points_;
    }

    bool redundant(std::size_t id) const noexcept {
      return redundant_[id] != 0;
    }

    // How root_values encodes values.
    enum class Encoding {
      // Ids in the pool passed to root_values.
      Ids,
      // Exact equality keys for an f-rooted term: equal keys iff equal
      // values, but keys are not pool ids. Such values are never in B.
      Keys
    };

    // Values of term `id` at every point of domain^V. Ids may be interned in
    // `pool`, which must be a copy of pool(); callers that discard them use
    // mark()/rollback(). Throws InvariantError for redundant terms.
    Encoding root_values(std::size_t                 id,
                         ElementPool&                pool,
                         std::vector<std::uint64_t>& out) const;

   private:
    // A cached table together with the variables it ranges over.
    struct Source {
      ElemId const*                table;
      std::vector<unsigned> const* vars;
    };
    Source source(std::size_t id) const noexcept;
    void   cache(std::size_t id);

    TermDag const&                   dag_;
    Params                           params_;
    Budget                           budget_;
    ElementPool                      pool_;
    std::vector<ElemId>              domain_ids_;
    std::size_t                      num_points_ = 0;
    std::vector<std::uint8_t>        redundant_;
    std::vector<std::vector<unsigned>> vars_;
    std::vector<std::vector<ElemId>> table_;
    std::size_t                      cached_entries_ = 0;
    unsigned                         pack_bits_      = 0;
    std::vector<unsigned>            all_vars_;
  };

  // Least block assignment (p_1, q_1, ..., p_m, q_m), block positions in
  // [0, line), whose cube in the value table `values` fails the term
  // condition. The table covers [0, line^m) with block 1 most significant.
  // Throws BudgetError if the bookkeeping exceeds max_entries.
  std::optional<std::vector<std::uint32_t>>
  first_tc_failure(std::span<std::uint64_t const> values,
                   unsigned                       m,
                   std::size_t                    line,
                   std::size_t                    max_entries);

  // A corner-lemma counterexample in a table over [0, s^m) with block length
  // 1: a point p and a choice q such that the cube spanned by (p_j, q_j)
  // has vertex 1 equal to all its neighbours without being constant.
  // Blocks outside `used` are held at p_j. Points are scanned in index
  // order and, per point, q in lexicographic order. `premises` receives the
  // number of cubes whose premise held.
  struct CornerHit {
    std::vector<std::uint32_t> p;
    std::vector<std::uint32_t> q;
  };
  std::optional<CornerHit>
  first_corner_violation(std::span<std::uint64_t const> values,
                         unsigned                       m,
                         std::size_t                    s,
                         std::uint64_t                  used,
                         std::size_t                    max_entries,
                         std::uint64_t&                 premises);

}  // namespace commlab::detail
