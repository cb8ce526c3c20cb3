#include "commlab/enumerate.hpp"

#include <algorithm>
#include <limits>

namespace commlab {

  namespace {
    constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) noexcept {
      return a > kSat - b ? kSat : a + b;
    }

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) noexcept {
      if (a != 0 && b > kSat / a) {
        return kSat;
      }
      return a * b;
    }
  }  // namespace

  std::uint64_t count_terms(unsigned      num_vars,
                            unsigned      max_depth,
                            std::size_t   pool_size,
                            Params const& params) noexcept {
    std::uint64_t t = num_vars;
    for (unsigned d = 1; d <= max_depth; ++d) {
      std::uint64_t power = 1;
      for (unsigned i = 0; i < params.n(); ++i) {
        power = sat_mul(power, t);
      }
      t = sat_add(sat_add(num_vars, sat_mul(1 + pool_size, t)), power);
    }
    return t;
  }

  TermDag enumerate_term_dag(unsigned            num_vars,
                             unsigned            max_depth,
                             std::vector<Triple> triple_pool,
                             Params const&       params,
                             std::size_t         max_terms) {
    if (num_vars == 0 || num_vars > 64) {
      throw DomainError("term enumeration needs 1 to 64 variables, got "
                        + std::to_string(num_vars));
    }
    for (auto const& t : triple_pool) {
      check_triple(t, params);
    }
    std::sort(triple_pool.begin(), triple_pool.end());
    triple_pool.erase(std::unique(triple_pool.begin(), triple_pool.end()),
                      triple_pool.end());

    std::uint64_t total
        = count_terms(num_vars, max_depth, triple_pool.size(), params);
    if (total > max_terms) {
      throw BudgetError("term enumeration would produce "
                        + (total == kSat ? std::string("more than 2^64")
                                         : std::to_string(total))
                        + " terms, above the cap of "
                        + std::to_string(max_terms));
    }

    TermDag dag;
    dag.triples_   = std::move(triple_pool);
    dag.num_vars_  = num_vars;
    dag.max_depth_ = max_depth;
    dag.nodes_.reserve(total);

    auto add = [&dag](TermNode nd, std::span<std::uint32_t const> ch) {
      nd.children     = static_cast<std::uint32_t>(dag.child_.size());
      nd.num_children = static_cast<std::uint32_t>(ch.size());
      for (auto c : ch) {
        nd.var_mask |= dag.nodes_[c].var_mask;
      }
      dag.child_.insert(dag.child_.end(), ch.begin(), ch.end());
      dag.nodes_.push_back(nd);
    };

    dag.depth_begin_.push_back(0);
    for (std::uint32_t v = 0; v < num_vars; ++v) {
      add(TermNode{Term::Kind::Var, v, 0, 0, 0, 0, std::uint64_t{1} << v}, {});
    }

    unsigned const n = params.n();
    std::vector<std::uint32_t> tuple(n);
    for (unsigned d = 1; d <= max_depth; ++d) {
      auto lo = static_cast<std::uint32_t>(dag.depth_begin_[d - 1]);
      auto hi = static_cast<std::uint32_t>(dag.nodes_.size());
      dag.depth_begin_.push_back(hi);

      for (std::uint32_t c = lo; c < hi; ++c) {
        add(TermNode{Term::Kind::U, 0, 0, 0, 0, d, 0}, {&c, 1});
      }
      for (std::uint32_t t = 0; t < dag.triples_.size(); ++t) {
        for (std::uint32_t c = lo; c < hi; ++c) {
          add(TermNode{Term::Kind::UPQR, 0, t, 0, 0, d, 0}, {&c, 1});
        }
      }
      // Odometer over [0, hi)^n in lexicographic order, keeping the tuples
      // with at least one child of depth d - 1.
      std::fill(tuple.begin(), tuple.end(), 0);
      while (true) {
        if (*std::max_element(tuple.begin(), tuple.end()) >= lo) {
          add(TermNode{Term::Kind::F, 0, 0, 0, 0, d, 0}, tuple);
        }
        unsigned pos = n;
        while (pos > 0 && ++tuple[pos - 1] == hi) {
          tuple[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) {
          break;
        }
      }
    }
    if (dag.nodes_.size() != total) {
      throw InvariantError("term enumeration produced "
                           + std::to_string(dag.nodes_.size())
                           + " terms, expected " + std::to_string(total));
    }
    return dag;
  }

  Term TermDag::term(std::size_t id) const {
    auto const& nd = nodes_.at(id);
    switch (nd.kind) {
      case Term::Kind::Var:
        return Term::var(nd.var);
      case Term::Kind::U:
        return Term::u(term(children(id)[0]));
      case Term::Kind::UPQR:
        return Term::upqr(triples_[nd.triple], term(children(id)[0]));
      case Term::Kind::F: {
        std::vector<Term> args;
        args.reserve(nd.num_children);
        for (auto c : children(id)) {
          args.push_back(term(c));
        }
        return Term::f(std::move(args));
      }
      default:
        throw InvariantError("constant node in a term DAG");
    }
  }

  std::vector<Term> enumerate_terms(unsigned            num_vars,
                                    unsigned            max_depth,
                                    std::vector<Triple> triple_pool,
                                    Params const&       params,
                                    std::size_t         max_terms) {
    TermDag dag = enumerate_term_dag(
        num_vars, max_depth, std::move(triple_pool), params, max_terms);
    std::vector<Term> out;
    out.reserve(dag.size());
    for (std::size_t id = 0; id < dag.size(); ++id) {
      out.push_back(dag.term(id));
    }
    return out;
  }

}  // namespace commlab
