#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "commlab/finite_algebra.hpp"

namespace fixtures {

  inline commlab::Operation
  make_op(std::string symbol,
          unsigned    arity,
          std::size_t s,
          std::function<std::uint32_t(std::vector<std::uint32_t> const&)> fn) {
    commlab::Operation op{std::move(symbol), arity, {}};
    std::size_t        count = 1;
    for (unsigned k = 0; k < arity; ++k) {
      count *= s;
    }
    for (std::size_t idx = 0; idx < count; ++idx) {
      // First argument most significant.
      std::vector<std::uint32_t> args(arity);
      std::size_t                rest = idx;
      for (unsigned k = arity; k-- > 0;) {
        args[k] = static_cast<std::uint32_t>(rest % s);
        rest /= s;
      }
      op.table.push_back(fn(args));
    }
    return op;
  }

  inline commlab::FiniteAlgebra cyclic_group(std::uint32_t s) {
    using V = std::vector<std::uint32_t>;
    return commlab::FiniteAlgebra(
        s,
        {make_op("+", 2, s, [s](V const& a) { return (a[0] + a[1]) % s; }),
         make_op("-", 1, s, [s](V const& a) { return (s - a[0]) % s; }),
         make_op("0", 0, s, [](V const&) { return 0u; })});
  }

  inline commlab::FiniteAlgebra z2() {
    return cyclic_group(2);
  }
  inline commlab::FiniteAlgebra z4() {
    return cyclic_group(4);
  }
  inline commlab::FiniteAlgebra semilattice2() {
    return commlab::FiniteAlgebra(
        2,
        {make_op("meet", 2, 2, [](std::vector<std::uint32_t> const& a) {
          return std::min(a[0], a[1]);
        })});
  }
  inline commlab::FiniteAlgebra set2() {
    return commlab::FiniteAlgebra(2, {});
  }
  inline commlab::FiniteAlgebra set3() {
    return commlab::FiniteAlgebra(3, {});
  }
  inline commlab::FiniteAlgebra trivial() {
    return commlab::FiniteAlgebra(
        1, {make_op("e", 0, 1, [](std::vector<std::uint32_t> const&) {
              return 0u;
            })});
  }

  // Size 1..max_size, 0..max_ops operations of arity 0..max_arity, uniform
  // random tables.
  inline commlab::FiniteAlgebra random_algebra(std::mt19937_64& rng,
                                               std::size_t      max_size,
                                               unsigned         max_ops,
                                               unsigned         max_arity) {
    std::size_t const s = 1 + rng() % max_size;
    unsigned const    k = rng() % (max_ops + 1);
    std::vector<commlab::Operation> ops;
    for (unsigned i = 0; i < k; ++i) {
      unsigned const arity = rng() % (max_arity + 1);
      ops.push_back(make_op("op" + std::to_string(i),
                            arity,
                            s,
                            [&](std::vector<std::uint32_t> const&) {
                              return static_cast<std::uint32_t>(rng() % s);
                            }));
    }
    return commlab::FiniteAlgebra(s, std::move(ops));
  }

}  // namespace fixtures
