#include "commlab/tc_search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "commlab/detail/term_tables.hpp"
#include "commlab/enumerate.hpp"

namespace commlab {

  namespace {

    std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
      std::uint64_t r = 1;
      for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
      }
      return r;
    }

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      return a * b;
    }

    std::vector<Element> canonical_domain(std::vector<Element> domain,
                                          Params const&        params) {
      for (auto const& e : domain) {
        check_well_formed(e, params);
      }
      std::sort(domain.begin(), domain.end());
      domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
      if (domain.empty()) {
        throw DomainError("the search domain is empty");
      }
      return domain;
    }

    // Per-worker scratch state.
    struct Worker {
      ElementPool                pool;
      std::vector<std::uint64_t> values;
    };

    // Runs body(worker, id) over ids [0, count) and returns the least id for
    // which it reported a hit, or count. Ids are dealt round-robin to the
    // threads; a thread stops once its next id is past the best hit so far,
    // so every id below the final answer is processed. An exception is
    // rethrown only if it arose below the final answer, which keeps the
    // outcome independent of the thread count.
    template <typename Body>
    std::size_t scan_first(std::size_t        count,
                           unsigned           threads,
                           ElementPool const& base,
                           Body&&             body) {
      threads = std::max(1u, threads);
      std::atomic<std::size_t> best{count};
      std::vector<std::pair<std::size_t, std::exception_ptr>> errors(
          threads, {count, nullptr});

      auto run = [&](unsigned t) {
        Worker      w{base, {}};
        std::size_t id = t;
        try {
          for (; id < count; id += threads) {
            if (id >= best.load(std::memory_order_acquire)) {
              return;
            }
            if (body(w, id)) {
              std::size_t cur = best.load();
              while (id < cur && !best.compare_exchange_weak(cur, id)) {
              }
              return;
            }
          }
        } catch (...) {
          errors[t] = {id, std::current_exception()};
        }
      };

      if (threads == 1) {
        run(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back(run, t);
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      auto first = std::min_element(
          errors.begin(), errors.end(),
          [](auto const& a, auto const& b) { return a.first < b.first; });
      if (first->second && first->first < best.load()) {
        std::rethrow_exception(first->second);
      }
      return best.load();
    }

    SearchStats make_stats(TermDag const&                    dag,
                           std::size_t                       hit,
                           std::uint64_t                     domain_size,
                           std::uint64_t                     per_term,
                           std::vector<std::uint8_t> const&  evaluable) {
      SearchStats st;
      st.terms_enumerated = dag.size();
      st.terms_scanned    = hit < dag.size() ? hit + 1 : dag.size();
      st.terms_evaluated  = static_cast<std::uint64_t>(std::count(
          evaluable.begin(), evaluable.begin() + st.terms_scanned, 1));
      st.assignments      = sat_mul(st.terms_scanned, per_term);
      st.domain_size      = domain_size;
      return st;
    }

    // Decodes block position z (block_len digits base s, first most
    // significant) into a tuple of domain elements.
    std::vector<Element> decode(std::uint64_t               z,
                                unsigned                    block_len,
                                std::vector<Element> const& domain) {
      std::vector<Element> out(block_len);
      for (unsigned k = block_len; k-- > 0;) {
        out[k] = domain[z % domain.size()];
        z /= domain.size();
      }
      return out;
    }

    Assignment decode_point(std::uint64_t               point,
                            unsigned                    num_vars,
                            std::vector<Element> const& domain) {
      return decode(point, num_vars, domain);
    }

  }  // namespace

  TCSearchResult search_tc_witness(unsigned             m,
                                   unsigned             max_depth,
                                   unsigned             block_len,
                                   std::vector<Element> domain,
                                   std::vector<Triple>  triple_pool,
                                   Params const&        params,
                                   SearchOptions const& options) {
    if (m == 0 || block_len == 0) {
      throw DomainError("term-condition search needs m >= 1 and block "
                        "length >= 1");
    }
    domain = canonical_domain(std::move(domain), params);
    unsigned const num_vars = m * block_len;
    TermDag        dag      = enumerate_term_dag(num_vars,
                                     max_depth,
                                     std::move(triple_pool),
                                     params,
                                     options.budget.max_terms);
    detail::TermTables tables(dag, domain, params, options.budget);

    std::vector<std::uint64_t> block_mask(m, 0);
    for (unsigned v = 0; v < num_vars; ++v) {
      block_mask[v / block_len] |= std::uint64_t{1} << v;
    }
    std::vector<std::uint8_t> evaluable(dag.size(), 0);
    for (std::size_t id = 0; id < dag.size(); ++id) {
      auto const& nd = dag.node(id);
      bool        ok = !tables.redundant(id) && nd.kind != Term::Kind::U
                && nd.kind != Term::Kind::UPQR;
      for (unsigned j = 0; j < m && ok; ++j) {
        ok = (nd.var_mask & block_mask[j]) != 0;
      }
      evaluable[id] = ok ? 1 : 0;
    }

    std::uint64_t const line
        = sat_pow(tables.domain_size(), block_len);
    std::mutex                                   mutex;
    std::map<std::size_t, std::vector<std::uint32_t>> hits;
    std::size_t hit = scan_first(
        dag.size(), options.threads, tables.pool(),
        [&](Worker& w, std::size_t id) {
          if (!evaluable[id]) {
            return false;
          }
          auto mark = w.pool.mark();
          tables.root_values(id, w.pool, w.values);
          auto found = detail::first_tc_failure(
              w.values, m, line, options.budget.max_table);
          w.pool.rollback(mark);
          if (!found) {
            return false;
          }
          std::lock_guard lock(mutex);
          hits.emplace(id, std::move(*found));
          return true;
        });

    TCSearchResult result;
    result.stats = make_stats(dag,
                              hit,
                              domain.size(),
                              sat_pow(domain.size(), 2ull * num_vars),
                              evaluable);
    if (hit == dag.size()) {
      return result;
    }
    auto const&              a = hits.at(hit);
    BlockAssignment<Element> blocks;
    for (unsigned j = 0; j < m; ++j) {
      blocks.p.push_back(decode(a[2 * j], block_len, domain));
      blocks.q.push_back(decode(a[2 * j + 1], block_len, domain));
    }
    Term          term = dag.term(hit);
    Cube<Element> cube = term_cube(term, blocks, params);
    if (!is_tc_failure(cube)) {
      throw InvariantError("table search reported a witness that fails the "
                           "direct check: "
                           + term.to_string());
    }
    result.witness = TCWitness{std::move(term), std::move(blocks),
                               std::move(cube)};
    return result;
  }

  CornerSearchResult search_corner_violation(unsigned             m,
                                             unsigned             max_depth,
                                             std::vector<Element> domain,
                                             std::vector<Triple>  triple_pool,
                                             Params const&        params,
                                             SearchOptions const& options) {
    if (m == 0) {
      throw DomainError("corner search needs m >= 1");
    }
    domain      = canonical_domain(std::move(domain), params);
    TermDag dag = enumerate_term_dag(
        m, max_depth, std::move(triple_pool), params, options.budget.max_terms);
    detail::TermTables tables(dag, domain, params, options.budget);

    // An outer u or u_pqr is injective, so it preserves every equality and
    // inequality of the inner cube; the inner term comes earlier.
    std::vector<std::uint8_t> evaluable(dag.size(), 0);
    for (std::size_t id = 0; id < dag.size(); ++id) {
      auto kind     = dag.node(id).kind;
      evaluable[id] = !tables.redundant(id) && kind != Term::Kind::U
                      && kind != Term::Kind::UPQR;
    }

    std::mutex                            mutex;
    std::map<std::size_t, std::uint64_t>  premises;
    std::map<std::size_t, detail::CornerHit> hits;
    std::size_t hit = scan_first(
        dag.size(), options.threads, tables.pool(),
        [&](Worker& w, std::size_t id) {
          if (!evaluable[id]) {
            return false;
          }
          auto mark = w.pool.mark();
          tables.root_values(id, w.pool, w.values);
          std::uint64_t count = 0;
          auto          found = detail::first_corner_violation(
              w.values, m, tables.domain_size(), dag.node(id).var_mask,
              options.budget.max_table, count);
          w.pool.rollback(mark);
          std::lock_guard lock(mutex);
          premises[id] = count;
          if (found) {
            hits.emplace(id, std::move(*found));
            return true;
          }
          return false;
        });

    CornerSearchResult result;
    result.stats = make_stats(
        dag, hit, domain.size(), sat_pow(domain.size(), 2ull * m), evaluable);
    for (auto const& [id, count] : premises) {
      if (id <= hit) {
        result.premises += count;
      }
    }
    if (hit == dag.size()) {
      return result;
    }
    auto const&              h = hits.at(hit);
    BlockAssignment<Element> blocks;
    for (unsigned j = 0; j < m; ++j) {
      blocks.p.push_back({domain[h.p[j]]});
      blocks.q.push_back({domain[h.q[j]]});
    }
    Term          term = dag.term(hit);
    Cube<Element> cube = term_cube(term, blocks, params);
    bool          premise = true;
    for (auto v : adjacent_vertices(m, 1)) {
      premise = premise && cube.r(v) == cube.r(1);
    }
    if (!premise || is_constant(cube)) {
      throw InvariantError("table search reported a corner violation that "
                           "fails the direct check: "
                           + term.to_string());
    }
    result.violation = CornerViolation{std::move(term), std::move(blocks),
                                       std::move(cube)};
    return result;
  }

  TermLemmaResult scan_term_lemma(unsigned             num_vars,
                                  unsigned             max_depth,
                                  std::vector<Element> domain,
                                  std::vector<Triple>  triple_pool,
                                  Params const&        params,
                                  SearchOptions const& options) {
    domain      = canonical_domain(std::move(domain), params);
    TermDag dag = enumerate_term_dag(num_vars,
                                     max_depth,
                                     std::move(triple_pool),
                                     params,
                                     options.budget.max_terms);
    detail::TermTables tables(dag, domain, params, options.budget);
    std::size_t const  s = tables.domain_size();

    // The range of f avoids B, so an f-rooted term never takes a value in C.
    std::vector<std::uint8_t> evaluable(dag.size(), 0);
    for (std::size_t id = 0; id < dag.size(); ++id) {
      evaluable[id] = !tables.redundant(id)
                      && dag.node(id).kind != Term::Kind::F;
    }

    // upow[k][d] = id of u^k(domain[d]).
    unsigned const                   max_power = 2 * params.n();
    std::vector<std::vector<ElemId>> upow(max_power + 1, tables.domain_ids());
    for (unsigned k = 1; k <= max_power; ++k) {
      for (std::size_t d = 0; d < s; ++d) {
        upow[k][d] = tables.pool().u(upow[k - 1][d]);
      }
    }
    std::vector<std::size_t> weight(num_vars, 1);
    for (unsigned i = num_vars - 1; i-- > 0;) {
      weight[i] = weight[i + 1] * s;
    }

    std::mutex                                              mutex;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> hits;
    std::map<std::size_t, std::uint8_t>                     premise;
    std::size_t hit = scan_first(
        dag.size(), options.threads, tables.pool(),
        [&](Worker& w, std::size_t id) {
          if (!evaluable[id]) {
            return false;
          }
          auto mark = w.pool.mark();
          tables.root_values(id, w.pool, w.values);
          auto const& t = w.values;
          std::size_t first = t.size();
          std::size_t second = t.size();
          for (std::size_t x = 0; x < t.size(); ++x) {
            if (!w.pool.in_C(static_cast<ElemId>(t[x]))) {
              continue;
            }
            if (first == t.size()) {
              first = x;
            } else if (t[x] != t[first]) {
              second = x;
              break;
            }
          }
          bool violated = false;
          if (second != t.size()) {
            bool power = false;
            for (unsigned i = 0; i < num_vars && !power; ++i) {
              for (unsigned k = 0; k <= max_power && !power; ++k) {
                power = true;
                for (std::size_t x = 0; x < t.size() && power; ++x) {
                  power = t[x] == upow[k][(x / weight[i]) % s];
                }
              }
            }
            violated = !power;
          }
          w.pool.rollback(mark);
          std::lock_guard lock(mutex);
          if (second != t.size()) {
            premise[id] = 1;
          }
          if (violated) {
            hits.emplace(id, std::make_pair(first, second));
          }
          return violated;
        });

    TermLemmaResult result;
    result.stats = make_stats(dag,
                              hit,
                              domain.size(),
                              sat_pow(domain.size(), 2ull * num_vars),
                              evaluable);
    for (auto const& [id, flag] : premise) {
      if (id <= hit) {
        result.premises += flag;
      }
    }
    if (hit == dag.size()) {
      return result;
    }
    auto [first, second] = hits.at(hit);
    Term       term      = dag.term(hit);
    Assignment a         = decode_point(first, num_vars, domain);
    Assignment b         = decode_point(second, num_vars, domain);
    Element    va        = eval_term(term, a, params);
    Element    vb        = eval_term(term, b, params);
    if (!va.in_C() || !vb.in_C() || va == vb) {
      throw InvariantError("table search reported a term-lemma violation "
                           "that fails the direct check: "
                           + term.to_string());
    }
    result.violation
        = TermLemmaViolation{std::move(term), std::move(a), std::move(b)};
    return result;
  }

}  // namespace commlab
