#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "commlab/element.hpp"
#include "commlab/term.hpp"

namespace commlab {

  // The 2^m values of an m-dimensional term cube. Vertex i (1-based, as r_i
  // in the literature) is stored at vertices()[i - 1].
  template <typename V>
  class Cube {
   public:
    Cube(unsigned dim, std::vector<V> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {
      if (dim == 0 || dim > 30
          || vertices_.size() != (std::size_t{1} << dim)) {
        throw DomainError("a cube of dimension " + std::to_string(dim)
                          + " cannot have " + std::to_string(vertices_.size())
                          + " vertices");
      }
    }

    unsigned dim() const noexcept {
      return dim_;
    }
    std::vector<V> const& vertices() const noexcept {
      return vertices_;
    }
    std::size_t size() const noexcept {
      return vertices_.size();
    }
    // 1-based access.
    V const& r(std::size_t i) const {
      return vertices_.at(i - 1);
    }

    friend bool operator==(Cube const&, Cube const&) = default;

   private:
    unsigned       dim_;
    std::vector<V> vertices_;
  };

  // Bits of vertex i of an m-cube; bit j - 1 is 1 when block j takes q_j.
  // Block j has weight 2^(m-j), so the last block varies fastest and
  // (r_{2^m - 1}, r_{2^m}) is a block-m edge. Throws DomainError if i is not
  // in 1..2^m.
  std::vector<std::uint8_t> vertex_assignment(unsigned m, std::size_t i);

  // The m vertices differing from i in exactly one block, ascending.
  std::vector<std::size_t> adjacent_vertices(unsigned m, std::size_t i);

  template <typename V>
  bool is_constant(Cube<V> const& c) {
    auto const& v = c.vertices();
    for (auto const& x : v) {
      if (!(x == v.front())) {
        return false;
      }
    }
    return true;
  }

  // r_{2t-1} = r_{2t} for 1 <= t < 2^(m-1) and r_{2^m - 1} != r_{2^m}.
  template <typename V>
  bool is_tc_failure(Cube<V> const& c) {
    auto const& v    = c.vertices();
    std::size_t last = v.size() - 2;
    for (std::size_t k = 0; k < last; k += 2) {
      if (!(v[k] == v[k + 1])) {
        return false;
      }
    }
    return !(v[last] == v[last + 1]);
  }

  // Per-block tuples (p_j, q_j) of a common length `block_len`. Term
  // variable x_v reads position v % block_len of block v / block_len.
  template <typename V>
  struct BlockAssignment {
    std::vector<std::vector<V>> p;
    std::vector<std::vector<V>> q;

    unsigned dim() const noexcept {
      return static_cast<unsigned>(p.size());
    }
    std::size_t block_len() const noexcept {
      return p.empty() ? 0 : p.front().size();
    }

    // Throws DomainError if the tuples disagree in count or length.
    void validate() const {
      if (p.empty() || p.size() != q.size()) {
        throw DomainError("a block assignment needs matching p and q blocks");
      }
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j].size() != block_len() || q[j].size() != block_len()
            || block_len() == 0) {
          throw DomainError("block " + std::to_string(j + 1)
                            + " has tuples of unequal or zero length");
        }
      }
    }

    // The variable values selected by vertex i.
    std::vector<V> select(std::size_t i) const {
      auto           bits = vertex_assignment(dim(), i);
      std::vector<V> out;
      out.reserve(dim() * block_len());
      for (unsigned j = 0; j < dim(); ++j) {
        auto const& src = bits[j] ? q[j] : p[j];
        out.insert(out.end(), src.begin(), src.end());
      }
      return out;
    }

    friend bool operator==(BlockAssignment const&, BlockAssignment const&)
        = default;
  };

  // Generic term cube: vertex i is eval(blocks.select(i)).
  template <typename V, typename Eval>
  auto term_cube(BlockAssignment<V> const& blocks, Eval&& eval)
      -> Cube<decltype(eval(std::vector<V>{}))> {
    blocks.validate();
    using R = decltype(eval(std::vector<V>{}));
    std::size_t    count = std::size_t{1} << blocks.dim();
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
      out.push_back(eval(blocks.select(i)));
    }
    return Cube<R>(blocks.dim(), std::move(out));
  }

  // Term cube of t in A. Throws UnboundVariable if t reads a variable beyond
  // dim * block_len.
  Cube<Element> term_cube(Term const&                     t,
                          BlockAssignment<Element> const& blocks,
                          Params const&                   params);

  // A term together with a block assignment whose cube fails the term
  // condition.
  struct TCWitness {
    Term                     term;
    BlockAssignment<Element> blocks;
    Cube<Element>            cube;

    unsigned dim() const noexcept {
      return cube.dim();
    }
  };

}  // namespace commlab
