#include "commlab/detail/term_tables.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace commlab::detail {

  namespace {

    std::size_t checked_power(std::size_t base, std::size_t exp,
                              std::size_t cap, char const* what) {
      std::size_t r = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) {
          throw BudgetError(std::string(what) + " has more than "
                            + std::to_string(cap) + " entries");
        }
        r *= base;
      }
      return r;
    }

    // Index strides of a table over `vars` for each position of `target`.
    std::vector<std::size_t> strides_for(std::vector<unsigned> const& vars,
                                         std::vector<unsigned> const& target,
                                         std::size_t                  s) {
      std::vector<std::size_t> out(target.size(), 0);
      std::size_t              stride = 1;
      for (std::size_t t = vars.size(); t-- > 0;) {
        auto it = std::find(target.begin(), target.end(), vars[t]);
        out[static_cast<std::size_t>(it - target.begin())] = stride;
        stride *= s;
      }
      return out;
    }

    // Walks every point of domain^|target| in index order, handing `fn` the
    // point index and the current entry of each source table.
    template <typename Fn>
    void sweep(std::size_t                                  s,
               std::size_t                                  dims,
               std::vector<ElemId const*> const&            tables,
               std::vector<std::vector<std::size_t>> const& strides,
               Fn&&                                         fn) {
      std::size_t const        k = tables.size();
      std::vector<std::size_t> idx(k, 0);
      std::vector<std::size_t> digit(dims, 0);
      std::vector<ElemId>      vals(k);
      std::size_t              total = 1;
      for (std::size_t i = 0; i < dims; ++i) {
        total *= s;
      }
      for (std::size_t point = 0; point < total; ++point) {
        for (std::size_t c = 0; c < k; ++c) {
          vals[c] = tables[c][idx[c]];
        }
        fn(point, std::span<ElemId const>(vals));
        for (std::size_t pos = dims; pos-- > 0;) {
          if (++digit[pos] < s) {
            for (std::size_t c = 0; c < k; ++c) {
              idx[c] += strides[c][pos];
            }
            break;
          }
          digit[pos] = 0;
          for (std::size_t c = 0; c < k; ++c) {
            idx[c] -= strides[c][pos] * (s - 1);
          }
        }
      }
    }

    std::uint64_t hash_table(std::uint64_t mask, std::vector<ElemId> const& t) {
      std::uint64_t h = mask * 0x9e3779b97f4a7c15ULL;
      for (auto x : t) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }

  }  // namespace

  TermTables::TermTables(TermDag const&              dag,
                         std::vector<Element> const& domain,
                         Params const&               params,
                         Budget const&               budget)
      : dag_(dag), params_(params), budget_(budget), pool_(params) {
    if (domain.empty()) {
      throw DomainError("the search domain is empty");
    }
    for (auto const& e : domain) {
      domain_ids_.push_back(pool_.intern(e));
    }
    std::size_t const s = domain_ids_.size();
    num_points_ = checked_power(
        s, dag.num_vars(), budget.max_table, "the term value table");
    for (unsigned v = 0; v < dag.num_vars(); ++v) {
      all_vars_.push_back(v);
    }

    redundant_.assign(dag.size(), 0);
    vars_.resize(dag.size());
    table_.resize(dag.size());
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;

    for (std::size_t id = 0; id < dag.size(); ++id) {
      auto const& nd = dag.node(id);
      for (unsigned v = 0; v < dag.num_vars(); ++v) {
        if ((nd.var_mask >> v) & 1) {
          vars_[id].push_back(v);
        }
      }
      for (auto c : dag.children(id)) {
        redundant_[id] |= redundant_[c];
      }
      if (redundant_[id] || nd.kind == Term::Kind::Var
          || nd.depth >= dag.max_depth()) {
        continue;
      }
      cache(id);
      auto& bucket = seen[hash_table(nd.var_mask, table_[id])];
      for (auto other : bucket) {
        if (dag.node(other).var_mask == nd.var_mask
            && table_[other] == table_[id]) {
          redundant_[id] = 1;
          break;
        }
      }
      if (redundant_[id]) {
        cached_entries_ -= table_[id].size();
        table_[id] = {};
      } else {
        bucket.push_back(static_cast<std::uint32_t>(id));
      }
    }

    unsigned bits = std::bit_width(pool_.size());
    if (params.n() * bits <= 62) {
      pack_bits_ = bits;
    }
  }

  TermTables::Source TermTables::source(std::size_t id) const noexcept {
    auto const& nd = dag_.node(id);
    if (nd.kind == Term::Kind::Var) {
      return {domain_ids_.data(), &vars_[id]};
    }
    return {table_[id].data(), &vars_[id]};
  }

  void TermTables::cache(std::size_t id) {
    std::size_t const s    = domain_ids_.size();
    auto const&       vars = vars_[id];
    std::size_t const size
        = checked_power(s, vars.size(), budget_.max_table, "a term table");
    if (cached_entries_ + size > budget_.max_table) {
      throw BudgetError("cached term tables exceed "
                        + std::to_string(budget_.max_table) + " entries");
    }
    cached_entries_ += size;

    auto const&                           nd = dag_.node(id);
    std::vector<ElemId const*>            tables;
    std::vector<std::vector<std::size_t>> strides;
    for (auto c : dag_.children(id)) {
      Source src = source(c);
      tables.push_back(src.table);
      strides.push_back(strides_for(*src.vars, vars, s));
    }
    auto& out = table_[id];
    out.resize(size);
    switch (nd.kind) {
      case Term::Kind::U:
        sweep(s, vars.size(), tables, strides, [&](std::size_t i, auto v) {
          out[i] = pool_.u(v[0]);
        });
        break;
      case Term::Kind::UPQR: {
        PoolTriple t = pool_.intern(dag_.triples()[nd.triple]);
        sweep(s, vars.size(), tables, strides, [&](std::size_t i, auto v) {
          out[i] = pool_.u_pqr(t, v[0]);
        });
        break;
      }
      case Term::Kind::F:
        sweep(s, vars.size(), tables, strides, [&](std::size_t i, auto v) {
          out[i] = pool_.f(v);
        });
        break;
      default:
        throw InvariantError("unexpected node kind while caching tables");
    }
  }

  TermTables::Encoding
  TermTables::root_values(std::size_t                 id,
                          ElementPool&                pool,
                          std::vector<std::uint64_t>& out) const {
    if (redundant_[id]) {
      throw InvariantError("values requested for a redundant term");
    }
    std::size_t const s  = domain_ids_.size();
    auto const&       nd = dag_.node(id);
    out.resize(num_points_);

    std::vector<ElemId const*>            tables;
    std::vector<std::vector<std::size_t>> strides;
    auto add_source = [&](Source src) {
      tables.push_back(src.table);
      strides.push_back(strides_for(*src.vars, all_vars_, s));
    };
    auto const dims = all_vars_.size();

    if (nd.kind == Term::Kind::Var || nd.depth < dag_.max_depth()) {
      add_source(source(id));
      sweep(s, dims, tables, strides, [&](std::size_t i, auto v) {
        out[i] = v[0];
      });
      return Encoding::Ids;
    }
    for (auto c : dag_.children(id)) {
      add_source(source(c));
    }
    switch (nd.kind) {
      case Term::Kind::U:
        sweep(s, dims, tables, strides, [&](std::size_t i, auto v) {
          out[i] = pool.u(v[0]);
        });
        return Encoding::Ids;
      case Term::Kind::UPQR: {
        PoolTriple t = pool.intern(dag_.triples()[nd.triple]);
        sweep(s, dims, tables, strides, [&](std::size_t i, auto v) {
          out[i] = pool.u_pqr(t, v[0]);
        });
        return Encoding::Ids;
      }
      case Term::Kind::F:
        break;
      default:
        throw InvariantError("unexpected node kind in a term DAG");
    }
    if (pack_bits_ == 0) {
      sweep(s, dims, tables, strides, [&](std::size_t i, auto v) {
        out[i] = pool.f(v);
      });
      return Encoding::Ids;
    }
    // Off the domain of f_0, f is injective and its value is determined by
    // the argument tuple, so the packed tuple is an exact key. On the domain
    // the value is one of the d constants, whose ids get an even key.
    unsigned const bits = pack_bits_;
    sweep(s, dims, tables, strides, [&](std::size_t i, auto v) {
      if (pool.in_dmn(v)) {
        out[i] = std::uint64_t{pool.f(v)} << 1;
        return;
      }
      std::uint64_t key = 0;
      for (auto x : v) {
        key = (key << bits) | x;
      }
      out[i] = (key << 1) | 1;
    });
    return Encoding::Keys;
  }

  namespace {

    using Set = std::vector<std::uint64_t>;

    // Solves the term condition over k blocks for a sparse set of "good"
    // corners G and "bad" corners H (nullptr: the complement of G): the
    // least (p_1, q_1, ..., p_k, q_k) such that every corner of the box
    // except the all-q corner lies in G and the all-q corner lies in H.
    std::optional<std::vector<std::uint32_t>>
    solve(unsigned                        k,
          Set const&                      G,
          Set const*                      H,
          std::size_t                     line,
          std::vector<std::uint64_t> const& weight) {
      if (G.empty() || (H != nullptr && H->empty())) {
        return std::nullopt;
      }
      if (k == 1) {
        std::uint64_t q = 0;
        if (H != nullptr) {
          q = H->front();
        } else {
          while (q < G.size() && G[q] == q) {
            ++q;
          }
          if (q >= line) {
            return std::nullopt;
          }
        }
        return std::vector<std::uint32_t>{static_cast<std::uint32_t>(G[0]),
                                          static_cast<std::uint32_t>(q)};
      }
      std::uint64_t const w = weight[k - 1];
      struct Row {
        std::uint64_t index;
        std::size_t   begin;
        std::size_t   end;
      };
      auto rows_of = [w](Set const& S) {
        std::vector<Row> rows;
        for (std::size_t i = 0; i < S.size();) {
          std::uint64_t r = S[i] / w;
          std::size_t   j = i;
          while (j < S.size() && S[j] / w == r) {
            ++j;
          }
          rows.push_back({r, i, j});
          i = j;
        }
        return rows;
      };
      auto suffixes = [w](Set const& S, Row const& r) {
        Set out;
        out.reserve(r.end - r.begin);
        for (std::size_t i = r.begin; i < r.end; ++i) {
          out.push_back(S[i] - r.index * w);
        }
        return out;
      };
      std::vector<Row> grows = rows_of(G);
      std::vector<Row> hrows;
      if (H != nullptr) {
        hrows = rows_of(*H);
      }
      Set gp;
      Set gq;
      Set hq;
      Set g2;
      Set h2;
      for (auto const& rp : grows) {
        gp = suffixes(G, rp);
        for (auto const& rq : grows) {
          if (rq.index == rp.index) {
            continue;
          }
          gq = suffixes(G, rq);
          g2.clear();
          std::set_intersection(gp.begin(), gp.end(), gq.begin(), gq.end(),
                                std::back_inserter(g2));
          if (g2.empty()) {
            continue;
          }
          h2.clear();
          if (H == nullptr) {
            std::set_difference(gp.begin(), gp.end(), gq.begin(), gq.end(),
                                std::back_inserter(h2));
          } else {
            auto it = std::lower_bound(
                hrows.begin(), hrows.end(), rq.index,
                [](Row const& r, std::uint64_t x) { return r.index < x; });
            if (it == hrows.end() || it->index != rq.index) {
              continue;
            }
            hq = suffixes(*H, *it);
            std::set_intersection(gp.begin(), gp.end(), hq.begin(), hq.end(),
                                  std::back_inserter(h2));
          }
          if (h2.empty()) {
            continue;
          }
          if (auto rest = solve(k - 1, g2, &h2, line, weight)) {
            std::vector<std::uint32_t> out{
                static_cast<std::uint32_t>(rp.index),
                static_cast<std::uint32_t>(rq.index)};
            out.insert(out.end(), rest->begin(), rest->end());
            return out;
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  std::optional<std::vector<std::uint32_t>>
  first_tc_failure(std::span<std::uint64_t const> values,
                   unsigned                       m,
                   std::size_t                    line,
                   std::size_t                    max_entries) {
    if (m == 0 || line == 0) {
      throw DomainError("first_tc_failure needs m >= 1 and a nonempty line");
    }
    if (m == 1) {
      for (std::size_t z = 1; z < line; ++z) {
        if (values[z] != values[0]) {
          return std::vector<std::uint32_t>{0, static_cast<std::uint32_t>(z)};
        }
      }
      return std::nullopt;
    }
    std::vector<std::uint64_t> weight{1};
    for (unsigned j = 1; j < m; ++j) {
      weight.push_back(weight.back() * line);
    }
    std::uint64_t const prefixes = weight.back();

    // For every pair z1 < z2 of last-block positions, the prefixes along
    // whose line the values at z1 and z2 coincide.
    std::unordered_map<std::uint64_t, Set>              coincide;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cls(line);
    std::size_t                                           entries = 0;
    for (std::uint64_t w = 0; w < prefixes; ++w) {
      auto const* row = values.data() + w * line;
      for (std::uint32_t z = 0; z < line; ++z) {
        cls[z] = {row[z], z};
      }
      std::sort(cls.begin(), cls.end());
      for (std::size_t i = 0; i < line;) {
        std::size_t j = i + 1;
        while (j < line && cls[j].first == cls[i].first) {
          ++j;
        }
        for (std::size_t a = i; a < j; ++a) {
          for (std::size_t b = a + 1; b < j; ++b) {
            std::uint64_t key
                = (std::uint64_t{cls[a].second} << 32) | cls[b].second;
            coincide[key].push_back(w);
            if (++entries > max_entries) {
              throw BudgetError("term-condition bookkeeping exceeds "
                                + std::to_string(max_entries) + " entries");
            }
          }
        }
        i = j;
      }
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(coincide.size());
    for (auto const& [key, set] : coincide) {
      keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());

    std::optional<std::vector<std::uint32_t>> best;
    for (auto key : keys) {
      auto prefix = solve(m - 1, coincide[key], nullptr, line, weight);
      if (!prefix) {
        continue;
      }
      prefix->push_back(static_cast<std::uint32_t>(key >> 32));
      prefix->push_back(static_cast<std::uint32_t>(key & 0xFFFF'FFFFu));
      if (!best || *prefix < *best) {
        best = std::move(prefix);
      }
    }
    return best;
  }

  std::optional<CornerHit>
  first_corner_violation(std::span<std::uint64_t const> values,
                         unsigned                       m,
                         std::size_t                    s,
                         std::uint64_t                  used,
                         std::size_t                    max_entries,
                         std::uint64_t&                 premises) {
    std::vector<std::size_t> weight(m, 1);
    for (unsigned j = m - 1; j-- > 0;) {
      weight[j] = weight[j + 1] * s;
    }
    std::size_t const total = weight[0] * s;

    // For each block j and point P, the positions z != P_j on the line of P
    // along j whose value equals the value at P: members_[j] holds the
    // classes back to back, start_[j][P] and size_[j][P] locate P's class.
    std::vector<std::vector<std::uint32_t>> members(m);
    std::vector<std::vector<std::uint32_t>> start(m);
    std::vector<std::vector<std::uint32_t>> size(m);
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cls(s);
    for (unsigned j = 0; j < m; ++j) {
      if (((used >> j) & 1) == 0) {
        continue;
      }
      start[j].assign(total, 0);
      size[j].assign(total, 1);
      members[j].reserve(total);
      for (std::size_t base = 0; base < total; ++base) {
        if ((base / weight[j]) % s != 0) {
          continue;
        }
        for (std::uint32_t z = 0; z < s; ++z) {
          cls[z] = {values[base + z * weight[j]], z};
        }
        std::sort(cls.begin(), cls.end());
        for (std::size_t i = 0; i < s;) {
          std::size_t k = i + 1;
          while (k < s && cls[k].first == cls[i].first) {
            ++k;
          }
          auto at = static_cast<std::uint32_t>(members[j].size());
          for (std::size_t a = i; a < k; ++a) {
            members[j].push_back(cls[a].second);
            std::size_t p = base + cls[a].second * weight[j];
            start[j][p]   = at;
            size[j][p]    = static_cast<std::uint32_t>(k - i);
          }
          i = k;
        }
      }
    }

    std::vector<std::uint32_t>              p(m);
    std::vector<std::uint32_t>              q(m);
    std::vector<std::vector<std::uint32_t>> options(m);
    std::vector<std::size_t>                choice(m);
    std::size_t                             checked = 0;
    for (std::size_t point = 0; point < total; ++point) {
      bool nontrivial = false;
      for (unsigned j = 0; j < m; ++j) {
        p[j] = static_cast<std::uint32_t>((point / weight[j]) % s);
        options[j].clear();
        if (((used >> j) & 1) != 0 && size[j][point] > 1) {
          for (std::uint32_t a = 0; a < size[j][point]; ++a) {
            std::uint32_t z = members[j][start[j][point] + a];
            if (z != p[j]) {
              options[j].push_back(z);
            }
          }
          std::sort(options[j].begin(), options[j].end());
          nontrivial = true;
        } else {
          options[j].push_back(p[j]);
        }
      }
      if (!nontrivial) {
        continue;
      }
      std::fill(choice.begin(), choice.end(), 0);
      while (true) {
        for (unsigned j = 0; j < m; ++j) {
          q[j] = options[j][choice[j]];
        }
        ++premises;
        if (++checked > max_entries) {
          throw BudgetError("corner-lemma cubes exceed "
                            + std::to_string(max_entries));
        }
        std::uint64_t const v0 = values[point];
        for (std::size_t vertex = 0; vertex < (std::size_t{1} << m);
             ++vertex) {
          std::size_t idx = 0;
          for (unsigned j = 0; j < m; ++j) {
            bool bit = (vertex >> (m - 1 - j)) & 1;
            idx += (bit ? q[j] : p[j]) * weight[j];
          }
          if (values[idx] != v0) {
            return CornerHit{p, q};
          }
        }
        unsigned pos = m;
        while (pos > 0 && ++choice[pos - 1] == options[pos - 1].size()) {
          choice[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) {
          break;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace commlab::detail
