#include "commlab/commutator.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace commlab {

  unsigned CubeSet::bits_for(std::size_t universe) noexcept {
    return std::max(1u, static_cast<unsigned>(std::bit_width(universe - 1)));
  }

  bool CubeSet::fits(unsigned dim, std::size_t universe) noexcept {
    return dim < 7 && (std::size_t{1} << dim) * bits_for(universe) <= 64;
  }

  CubeSet::CubeSet(unsigned                   dim,
                   std::size_t                universe,
                   std::vector<std::uint64_t> packed)
      : dim_(dim), bits_(bits_for(universe)), packed_(std::move(packed)) {
    if (!fits(dim, universe)) {
      throw BudgetError("a " + std::to_string(dim)
                        + "-cube over a universe of size "
                        + std::to_string(universe)
                        + " does not fit in a 64-bit word");
    }
    std::sort(packed_.begin(), packed_.end());
    packed_.erase(std::unique(packed_.begin(), packed_.end()), packed_.end());
  }

  Cube<std::uint32_t> CubeSet::cube(std::size_t k) const {
    std::vector<std::uint32_t> v;
    for (std::size_t i = 1; i <= (std::size_t{1} << dim_); ++i) {
      v.push_back(vertex(k, i));
    }
    return Cube<std::uint32_t>(dim_, std::move(v));
  }

  bool CubeSet::contains(Cube<std::uint32_t> const& c) const {
    if (c.dim() != dim_) {
      return false;
    }
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.vertices()[i] >= (std::uint64_t{1} << bits_)) {
        return false;
      }
      word |= std::uint64_t{c.vertices()[i]} << (i * bits_);
    }
    return std::binary_search(packed_.begin(), packed_.end(), word);
  }

  namespace {
    void check_alphas(FiniteAlgebra const&        alg,
                      std::span<Congruence const> alphas) {
      if (alphas.empty()) {
        throw DomainError("at least one congruence is required");
      }
      for (auto const& a : alphas) {
        if (a.size() != alg.size()) {
          throw DomainError("congruence on " + std::to_string(a.size())
                            + " elements used with an algebra of size "
                            + std::to_string(alg.size()));
        }
      }
    }
  }  // namespace

  namespace {

    // Membership for packed cubes: a bitmap when the packed width is small,
    // a hash set otherwise.
    class PackedSet {
     public:
      explicit PackedSet(unsigned width) {
        if (width <= 26) {
          bitmap_.assign((std::size_t{1} << width) / 64 + 1, 0);
        }
      }
      bool insert(std::uint64_t c) {
        if (bitmap_.empty()) {
          return hashed_.insert(c).second;
        }
        auto& word = bitmap_[c >> 6];
        auto  bit  = std::uint64_t{1} << (c & 63);
        if (word & bit) {
          return false;
        }
        word |= bit;
        return true;
      }

     private:
      std::vector<std::uint64_t>        bitmap_;
      std::unordered_set<std::uint64_t> hashed_;
    };

    // Vertexwise application of one operation to packed cubes. Several
    // vertices are handled per table lookup: the table maps the
    // concatenated chunks of all arguments to the chunk of the result.
    class PackedOp {
     public:
      PackedOp(FiniteAlgebra const& alg,
               std::size_t          op,
               unsigned             bits,
               std::size_t          vertices)
          : alg_(alg), op_(op), bits_(bits), vertices_(vertices) {
        arity_ = alg.operations()[op].arity;
        std::size_t const per_vertex = std::size_t{arity_} * bits;
        chunk_ = static_cast<unsigned>(
            std::min<std::size_t>(vertices, per_vertex ? 16 / per_vertex : 0));
        if (chunk_ == 0) {
          return;
        }
        unsigned const   cbits = chunk_ * bits;
        std::size_t const size = std::size_t{1} << (cbits * arity_);
        table_.resize(size);
        std::vector<std::uint32_t> args(arity_);
        std::uint64_t const        mask = (std::uint64_t{1} << bits) - 1;
        for (std::size_t key = 0; key < size; ++key) {
          std::uint64_t out = 0;
          for (unsigned v = 0; v < chunk_; ++v) {
            bool valid = true;
            for (unsigned t = 0; t < arity_; ++t) {
              args[t] = static_cast<std::uint32_t>(
                  (key >> (t * cbits + v * bits)) & mask);
              valid = valid && args[t] < alg.size();
            }
            if (valid) {
              out |= std::uint64_t{alg.apply(op, args)} << (v * bits);
            }
          }
          table_[key] = static_cast<std::uint16_t>(out);
        }
      }

      std::uint64_t apply(std::uint64_t const* const* cubes) const {
        std::uint64_t c = 0;
        if (chunk_ != 0) {
          unsigned const      cbits = chunk_ * bits_;
          std::uint64_t const cmask = (std::uint64_t{1} << cbits) - 1;
          for (std::size_t v = 0; v < vertices_; v += chunk_) {
            unsigned const shift = static_cast<unsigned>(v * bits_);
            std::size_t    key   = 0;
            for (unsigned t = 0; t < arity_; ++t) {
              key |= ((*cubes[t] >> shift) & cmask) << (t * cbits);
            }
            c |= std::uint64_t{table_[key]} << shift;
          }
          return c;
        }
        std::uint64_t const        mask = (std::uint64_t{1} << bits_) - 1;
        std::vector<std::uint32_t> args(arity_);
        for (std::size_t v = 0; v < vertices_; ++v) {
          for (unsigned t = 0; t < arity_; ++t) {
            args[t]
                = static_cast<std::uint32_t>((*cubes[t] >> (v * bits_)) & mask);
          }
          c |= std::uint64_t{alg_.apply(op_, args)} << (v * bits_);
        }
        return c;
      }

     private:
      FiniteAlgebra const&       alg_;
      std::size_t                op_;
      unsigned                   bits_;
      std::size_t                vertices_;
      unsigned                   arity_ = 0;
      unsigned                   chunk_ = 0;
      std::vector<std::uint16_t> table_;
    };

  }  // namespace

  CubeSet cube_subpower(FiniteAlgebra const&        alg,
                        std::span<Congruence const> alphas,
                        std::size_t                 max_cubes) {
    check_alphas(alg, alphas);
    auto const        m = static_cast<unsigned>(alphas.size());
    std::size_t const s = alg.size();
    if (!CubeSet::fits(m, s)) {
      throw BudgetError("a " + std::to_string(m)
                        + "-cube over a universe of size " + std::to_string(s)
                        + " does not fit in a 64-bit word");
    }
    unsigned const    bits     = CubeSet::bits_for(s);
    std::size_t const vertices = std::size_t{1} << m;

    // Number of all cubes over the universe, saturated. Once every cube
    // has been found there is nothing left to close.
    std::size_t everything = 1;
    for (std::size_t v = 0; v < vertices && everything <= max_cubes; ++v) {
      everything *= s;
    }

    std::vector<std::uint64_t> list;
    PackedSet                  seen(static_cast<unsigned>(vertices * bits));
    auto add = [&](std::uint64_t c) {
      if (seen.insert(c)) {
        list.push_back(c);
        if (list.size() > max_cubes) {
          throw BudgetError("cube subpower exceeds "
                            + std::to_string(max_cubes) + " cubes");
        }
      }
    };

    for (unsigned j = 0; j < m; ++j) {
      for (auto const& block : alphas[j].blocks()) {
        for (auto a : block) {
          for (auto b : block) {
            std::uint64_t c = 0;
            for (std::size_t v = 0; v < vertices; ++v) {
              bool bit = (v >> (m - 1 - j)) & 1;
              c |= std::uint64_t{bit ? b : a} << (v * bits);
            }
            add(c);
          }
        }
      }
    }
    std::vector<PackedOp> ops;
    for (std::size_t op = 0; op < alg.operations().size(); ++op) {
      if (alg.operations()[op].arity == 0) {
        std::uint32_t const k = alg.apply(op, {});
        std::uint64_t       c = 0;
        for (std::size_t v = 0; v < vertices; ++v) {
          c |= std::uint64_t{k} << (v * bits);
        }
        add(c);
      } else {
        ops.emplace_back(alg, op, bits, vertices);
      }
    }

    // Semi-naive closure. A round applies each operation exactly to the
    // tuples with some entry from the previous round: the first such entry
    // sits at position t, earlier positions range over older cubes and
    // later positions over all cubes known at the start of the round.
    std::size_t                       old = 0;
    std::vector<std::size_t>          tuple, lo, hi;
    std::vector<std::uint64_t const*> args;
    while (old < list.size() && list.size() < everything) {
      std::size_t const cur = list.size();
      for (std::size_t op = 0, o = 0; op < alg.operations().size(); ++op) {
        unsigned const k = alg.operations()[op].arity;
        if (k == 0) {
          continue;
        }
        PackedOp const& packed = ops[o++];
        args.assign(k, nullptr);
        for (unsigned t = 0; t < k && list.size() < everything; ++t) {
          lo.assign(k, 0);
          hi.assign(k, 0);
          for (unsigned u = 0; u < k; ++u) {
            lo[u] = u == t ? old : 0;
            hi[u] = u < t ? old : cur;
          }
          bool empty = false;
          for (unsigned u = 0; u < k; ++u) {
            empty = empty || lo[u] >= hi[u];
          }
          if (empty) {
            continue;
          }
          tuple = lo;
          while (true) {
            for (unsigned u = 0; u < k; ++u) {
              args[u] = &list[tuple[u]];
            }
            // add() may reallocate list, so the pointers are refreshed on
            // every tuple.
            add(packed.apply(args.data()));
            if (list.size() == everything) {
              break;
            }
            unsigned pos = k;
            while (pos > 0 && ++tuple[pos - 1] == hi[pos - 1]) {
              tuple[pos - 1] = lo[pos - 1];
              --pos;
            }
            if (pos == 0) {
              break;
            }
          }
        }
      }
      old = cur;
    }
    return CubeSet(m, s, std::move(list));
  }

  namespace {
    // Critical pairs of the cubes whose matched edges lie in delta but
    // whose critical edge does not, in canonical storage order.
    std::vector<Pair> harvest(CubeSet const& cubes, Congruence const& delta) {
      std::vector<Pair> out;
      std::size_t const last = std::size_t{1} << cubes.dim();
      for (std::size_t k = 0; k < cubes.size(); ++k) {
        bool matched = true;
        for (std::size_t i = 1; i + 2 < last && matched; i += 2) {
          matched = delta.related(cubes.vertex(k, i), cubes.vertex(k, i + 1));
        }
        if (!matched) {
          continue;
        }
        std::uint32_t x = cubes.vertex(k, last - 1);
        std::uint32_t y = cubes.vertex(k, last);
        if (!delta.related(x, y)) {
          out.emplace_back(x, y);
        }
      }
      return out;
    }
  }  // namespace

  Congruence higher_commutator(FiniteAlgebra const&        alg,
                               std::span<Congruence const> alphas,
                               std::size_t                 max_cubes) {
    if (alphas.size() < 2) {
      throw DomainError("a higher commutator needs at least two arguments");
    }
    CubeSet    cubes = cube_subpower(alg, alphas, max_cubes);
    Congruence delta = Congruence::identity(alg.size());
    while (!delta.is_full()) {
      auto fresh = harvest(cubes, delta);
      if (fresh.empty()) {
        break;
      }
      auto pairs = delta.generators();
      pairs.insert(pairs.end(), fresh.begin(), fresh.end());
      delta = cg(alg, pairs);
    }
    return delta;
  }

  bool tc_holds(FiniteAlgebra const& alg,
                unsigned             m,
                Congruence const&    delta,
                std::size_t          max_cubes) {
    if (m < 2) {
      throw DomainError("the term condition needs dimension >= 2");
    }
    if (delta.size() != alg.size()) {
      throw DomainError("delta does not match the algebra size");
    }
    std::vector<Congruence> full(m, Congruence::full(alg.size()));
    return harvest(cube_subpower(alg, full, max_cubes), delta).empty();
  }

  std::vector<Congruence> central_series(FiniteAlgebra const& alg,
                                         unsigned             max_m,
                                         std::size_t          max_cubes) {
    if (max_m < 2) {
      throw DomainError("the central series starts at m = 2");
    }
    std::vector<Congruence> out;
    for (unsigned m = 2; m <= max_m; ++m) {
      std::vector<Congruence> full(m, Congruence::full(alg.size()));
      out.push_back(higher_commutator(alg, full, max_cubes));
      if (out.size() >= 2 && !out.back().refines(out[out.size() - 2])) {
        throw InvariantError("theta_" + std::to_string(m) + " = "
                             + out.back().to_string()
                             + " does not refine theta_"
                             + std::to_string(m - 1) + " = "
                             + out[out.size() - 2].to_string());
      }
    }
    return out;
  }

  std::optional<unsigned>
  supernilpotence_degree(std::span<Congruence const> series) {
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i].is_identity()) {
        return static_cast<unsigned>(i + 2);
      }
    }
    return std::nullopt;
  }

  std::optional<unsigned> supernilpotence_degree(FiniteAlgebra const& alg,
                                                 unsigned             max_m,
                                                 std::size_t max_cubes) {
    if (max_m < 2) {
      throw DomainError("the central series starts at m = 2");
    }
    // Computed term by term so that an early identity stops the work.
    std::optional<Congruence> prev;
    for (unsigned m = 2; m <= max_m; ++m) {
      std::vector<Congruence> full(m, Congruence::full(alg.size()));
      Congruence theta = higher_commutator(alg, full, max_cubes);
      if (prev && !theta.refines(*prev)) {
        throw InvariantError("theta_" + std::to_string(m)
                             + " does not refine theta_"
                             + std::to_string(m - 1));
      }
      if (theta.is_identity()) {
        return m;
      }
      prev = std::move(theta);
    }
    return std::nullopt;
  }

  bool is_simple(FiniteAlgebra const& alg) {
    if (alg.size() < 2) {
      throw DomainError("simplicity is defined for algebras with at least "
                        "two elements");
    }
    for (std::uint32_t x = 0; x < alg.size(); ++x) {
      for (std::uint32_t y = x + 1; y < alg.size(); ++y) {
        Pair p{x, y};
        if (!cg(alg, std::span<Pair const>(&p, 1)).is_full()) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace commlab
