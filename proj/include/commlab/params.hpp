#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "commlab/errors.hpp"

namespace commlab {

  // Arity parameter of the constructed algebra. Every function that depends
  // on n receives a Params explicitly.
  class Params {
   public:
    explicit Params(unsigned n) : n_(n) {
      if (n < 2) {
        throw DomainError("arity parameter n must be >= 2, got "
                          + std::to_string(n));
      }
      if (n > 20) {
        throw DomainError("arity parameter n must be <= 20, got "
                          + std::to_string(n));
      }
    }

    unsigned n() const noexcept {
      return n_;
    }

    // Number of d constants: 2^(n-1) + 1.
    unsigned num_d() const noexcept {
      return (1u << (n_ - 1)) + 1;
    }

    // Length of the u cycle (a_1 b_1 ... a_n b_n c).
    unsigned cycle_length() const noexcept {
      return 2 * n_ + 1;
    }

    friend bool operator==(Params const&, Params const&) = default;

   private:
    unsigned n_;
  };

  // Resource caps. Exceeding any of them raises BudgetError.
  struct Budget {
    std::size_t max_elements = 1'000'000;
    std::size_t max_cubes    = 1'000'000;
    std::size_t max_terms    = 10'000'000;
    // Cap on the number of entries of a single evaluated term table.
    std::size_t max_table = 100'000'000;

    // A single master cap, as accepted by the command line: elements and
    // cubes are capped at `cap`, terms at 10 * cap, tables at 100 * cap.
    static Budget from_cap(std::size_t cap) {
      Budget b;
      b.max_elements = cap;
      b.max_cubes    = cap;
      b.max_terms    = cap * 10;
      b.max_table    = cap * 100;
      return b;
    }
  };

}  // namespace commlab
