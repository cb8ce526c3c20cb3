#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "commlab/congruence.hpp"
#include "commlab/cube.hpp"
#include "commlab/finite_algebra.hpp"
#include "commlab/params.hpp"

namespace commlab {

  // A set of cubes over a finite universe, each packed into one 64-bit word
  // (vertex i in bits [(i - 1) b, i b) for b = bits per vertex), kept sorted
  // ascending.
  class CubeSet {
   public:
    CubeSet(unsigned dim, std::size_t universe, std::vector<std::uint64_t> packed);

    unsigned dim() const noexcept {
      return dim_;
    }
    std::size_t size() const noexcept {
      return packed_.size();
    }
    std::vector<std::uint64_t> const& packed() const noexcept {
      return packed_;
    }
    unsigned bits() const noexcept {
      return bits_;
    }

    // Value at 1-based vertex i of the k-th cube.
    std::uint32_t vertex(std::size_t k, std::size_t i) const noexcept {
      return static_cast<std::uint32_t>((packed_[k] >> ((i - 1) * bits_))
                                        & ((std::uint64_t{1} << bits_) - 1));
    }
    Cube<std::uint32_t> cube(std::size_t k) const;
    bool                contains(Cube<std::uint32_t> const& c) const;

    // Bits per vertex for a universe of the given size, and whether an
    // m-cube fits in a word.
    static unsigned bits_for(std::size_t universe) noexcept;
    static bool     fits(unsigned dim, std::size_t universe) noexcept;

   private:
    unsigned                   dim_;
    unsigned                   bits_;
    std::vector<std::uint64_t> packed_;
  };

  // The subalgebra of alg^(2^m) generated by the cubes that put a at every
  // vertex whose block-j bit is 0 and b elsewhere, for each block j and each
  // (a, b) in alphas[j]. Throws BudgetError past max_cubes cubes or when a
  // cube does not fit in 64 bits.
  CubeSet cube_subpower(FiniteAlgebra const&        alg,
                        std::span<Congruence const> alphas,
                        std::size_t max_cubes = Budget{}.max_cubes);

  // [alphas_1, ..., alphas_m] for m >= 2: the least congruence delta such
  // that every cube of the subpower with its matched block-m edges in delta
  // has its critical edge in delta.
  Congruence higher_commutator(FiniteAlgebra const&        alg,
                               std::span<Congruence const> alphas,
                               std::size_t max_cubes = Budget{}.max_cubes);

  // Whether the m-dimensional term condition holds relative to delta.
  bool tc_holds(FiniteAlgebra const& alg,
                unsigned             m,
                Congruence const&    delta,
                std::size_t          max_cubes = Budget{}.max_cubes);

  // theta_2, ..., theta_max_m with theta_m = [1, ..., 1] (m copies). Throws
  // InvariantError if some theta_{m+1} does not refine theta_m.
  std::vector<Congruence> central_series(FiniteAlgebra const& alg,
                                         unsigned             max_m,
                                         std::size_t max_cubes
                                         = Budget{}.max_cubes);

  // Least m in 2..max_m with theta_m the identity, if any.
  std::optional<unsigned>
  supernilpotence_degree(FiniteAlgebra const& alg,
                         unsigned             max_m,
                         std::size_t          max_cubes = Budget{}.max_cubes);

  // Same, reusing a series computed by central_series.
  std::optional<unsigned>
  supernilpotence_degree(std::span<Congruence const> series);

  // True iff cg({(x, y)}) is full for all x != y. Needs at least two
  // elements (DomainError otherwise).
  bool is_simple(FiniteAlgebra const& alg);

}  // namespace commlab
