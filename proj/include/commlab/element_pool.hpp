#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "commlab/element.hpp"

namespace commlab {

  using ElemId                  = std::uint32_t;
  inline constexpr ElemId kNone = 0xFFFF'FFFFu;

  // A u_pqr triple with interned entries.
  struct PoolTriple {
    ElemId p;
    ElemId q;
    ElemId r;
  };

  // Hash-consing arena for elements of A. Every element gets a dense id and
  // equal elements get equal ids, so the operations of A become integer
  // lookups. Not thread-safe: give each worker its own pool.
  //
  // mark()/rollback() discard everything interned after the mark, which lets
  // a search evaluate one term over a large table and then drop the values.
  class ElementPool {
   public:
    explicit ElementPool(Params const& params);

    Params const& params() const noexcept {
      return params_;
    }
    std::size_t size() const noexcept {
      return nodes_.size();
    }

    ElemId  intern(Element const& e);
    Element element(ElemId id) const;

    PoolTriple intern(Triple const& t);

    ElemId f(std::span<ElemId const> args);
    ElemId u(ElemId x) const noexcept {
      int pos = nodes_[x].cycle_pos;
      if (pos < 0) {
        return x;
      }
      return cycle_[(static_cast<unsigned>(pos) + 1) % cycle_.size()];
    }
    ElemId u_pqr(PoolTriple const& t, ElemId x);

    bool in_dmn(std::span<ElemId const> args) const noexcept;
    // Member of C = {a_i, b_i}.
    bool in_C(ElemId x) const noexcept {
      int pos = nodes_[x].cycle_pos;
      return pos >= 0 && static_cast<unsigned>(pos) + 1 < cycle_.size();
    }
    bool in_B(ElemId x) const noexcept {
      return nodes_[x].kind <= static_cast<std::uint8_t>(Element::Kind::B);
    }
    ElemId c_id() const noexcept {
      return cycle_.back();
    }
    unsigned level(ElemId x) const noexcept {
      auto const& nd = nodes_[x];
      return nd.kind == static_cast<std::uint8_t>(Element::Kind::Tagged)
                 ? nd.x + 1
                 : 0;
    }

    std::strong_ordering compare(ElemId lhs, ElemId rhs) const;

    struct Mark {
      std::size_t nodes;
      std::size_t args;
    };
    Mark mark() const noexcept {
      return {nodes_.size(), args_.size()};
    }
    void rollback(Mark m);

   private:
    struct Node {
      std::uint8_t  kind;
      std::int8_t   cycle_pos;  // position in the u cycle, -1 if not on it
      std::uint32_t x;          // i, k, or tag
      std::uint32_t y;          // j
      std::uint32_t args;       // offset into args_ for Tagged
    };

    ElemId      intern_atom(Element::Kind kind, unsigned x, unsigned y);
    ElemId      find_or_insert(Node const& node, ElemId const* args);
    std::size_t hash_node(Node const& node, ElemId const* args) const noexcept;
    bool        same(ElemId id, Node const& node, ElemId const* args) const
        noexcept;
    void        insert_slot(ElemId id);
    void        grow();

    Params                     params_;
    std::vector<Node>          nodes_;
    std::vector<ElemId>        args_;
    std::vector<ElemId>        slots_;
    std::size_t                mask_ = 0;
    std::vector<ElemId>        cycle_;  // a_1 b_1 ... a_n b_n c
    std::vector<ElemId>        d_;      // d_1 ... d_{2^(n-1)+1}
  };

}  // namespace commlab
