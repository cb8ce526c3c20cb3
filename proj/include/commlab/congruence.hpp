#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commlab/finite_algebra.hpp"

namespace commlab {

  using Pair = std::pair<std::uint32_t, std::uint32_t>;

  // A partition of {0, ..., s - 1}, stored canonically: blocks sorted by
  // least element, elements sorted within each block. Equality is
  // structural.
  class Congruence {
   public:
    static Congruence identity(std::size_t s);
    static Congruence full(std::size_t s);
    // Throws DomainError unless `blocks` partition {0, ..., s - 1}.
    static Congruence from_blocks(std::size_t                             s,
                                  std::vector<std::vector<std::uint32_t>> blocks);
    // Elements with equal labels share a block.
    static Congruence from_labels(std::span<std::uint32_t const> labels);

    std::size_t size() const noexcept {
      return label_.size();
    }
    std::vector<std::vector<std::uint32_t>> const& blocks() const noexcept {
      return blocks_;
    }
    // Index of the block containing x.
    std::uint32_t block_of(std::uint32_t x) const noexcept {
      return label_[x];
    }
    bool related(std::uint32_t x, std::uint32_t y) const noexcept {
      return label_[x] == label_[y];
    }
    bool is_identity() const noexcept {
      return blocks_.size() == label_.size();
    }
    bool is_full() const noexcept {
      return blocks_.size() == 1;
    }
    // Every pair related here is related in `other`.
    bool refines(Congruence const& other) const noexcept;

    // A spanning set of pairs: (least element, x) for every other x.
    std::vector<Pair> generators() const;

    // "{{0,2},{1,3}}".
    std::string to_string() const;

    friend bool operator==(Congruence const& a, Congruence const& b) noexcept {
      return a.blocks_ == b.blocks_;
    }

   private:
    std::vector<std::uint32_t>              label_;
    std::vector<std::vector<std::uint32_t>> blocks_;
  };

  // Least congruence of alg containing the pairs. Throws DomainError for
  // elements outside the universe.
  Congruence cg(FiniteAlgebra const& alg, std::span<Pair const> pairs);

  // True iff every basic operation preserves the partition.
  bool is_compatible(FiniteAlgebra const& alg, Congruence const& theta);

}  // namespace commlab
