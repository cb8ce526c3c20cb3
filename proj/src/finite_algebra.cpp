#include "commlab/finite_algebra.hpp"

namespace commlab {

  FiniteAlgebra::FiniteAlgebra(std::size_t size, std::vector<Operation> ops)
      : size_(size), ops_(std::move(ops)) {
    if (size == 0) {
      throw DomainError("a finite algebra needs at least one element");
    }
    if (size > 0xFFFF'FFFFu) {
      throw DomainError("universe too large");
    }
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      auto const& o        = ops_[i];
      std::size_t expected = 1;
      for (unsigned k = 0; k < o.arity; ++k) {
        if (expected > (std::size_t{1} << 40) / size) {
          throw DomainError("operation '" + o.symbol
                            + "' has an impractically large table");
        }
        expected *= size;
      }
      if (o.table.size() != expected) {
        throw DomainError("operation '" + o.symbol + "' of arity "
                          + std::to_string(o.arity) + " needs "
                          + std::to_string(expected) + " table entries, got "
                          + std::to_string(o.table.size()));
      }
      for (std::size_t j = 0; j < o.table.size(); ++j) {
        if (o.table[j] >= size) {
          throw DomainError("operation '" + o.symbol + "' entry "
                            + std::to_string(j) + " is "
                            + std::to_string(o.table[j])
                            + ", outside the universe of size "
                            + std::to_string(size));
        }
      }
    }
  }

}  // namespace commlab
