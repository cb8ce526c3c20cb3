#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commlab/errors.hpp"

namespace commlab {

  // A basic operation of a finite algebra. The table lists g(x_1, ..., x_k)
  // for all argument tuples in lexicographic order, x_1 most significant.
  struct Operation {
    std::string                symbol;
    unsigned                   arity = 0;
    std::vector<std::uint32_t> table;

    friend bool operator==(Operation const&, Operation const&) = default;
  };

  // The universe {0, ..., size - 1} with a list of operation tables.
  class FiniteAlgebra {
   public:
    // Throws DomainError if size is 0, a table has the wrong length, or an
    // entry is out of range.
    FiniteAlgebra(std::size_t size, std::vector<Operation> operations);

    std::size_t size() const noexcept {
      return size_;
    }
    std::vector<Operation> const& operations() const noexcept {
      return ops_;
    }

    std::uint32_t apply(std::size_t                     op,
                        std::span<std::uint32_t const> args) const noexcept {
      auto const&   o   = ops_[op];
      std::size_t idx = 0;
      for (unsigned k = 0; k < o.arity; ++k) {
        idx = idx * size_ + args[k];
      }
      return o.table[idx];
    }

    friend bool operator==(FiniteAlgebra const&, FiniteAlgebra const&)
        = default;

   private:
    std::size_t            size_;
    std::vector<Operation> ops_;
  };

}  // namespace commlab
