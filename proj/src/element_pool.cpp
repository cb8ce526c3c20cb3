#include "commlab/element_pool.hpp"

#include <algorithm>

namespace commlab {

  namespace {
    constexpr auto kTagged = static_cast<std::uint8_t>(Element::Kind::Tagged);

    std::size_t mix64(std::size_t h) noexcept {
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      h *= 0xc4ceb9fe1a85ec53ULL;
      h ^= h >> 33;
      return h;
    }
  }  // namespace

  ElementPool::ElementPool(Params const& params) : params_(params) {
    slots_.assign(1024, kNone);
    mask_      = slots_.size() - 1;
    unsigned n = params.n();
    for (unsigned i = 1; i <= n; ++i) {
      cycle_.push_back(intern_atom(Element::Kind::A, i, 0));
      cycle_.push_back(intern_atom(Element::Kind::B, i, 0));
    }
    cycle_.push_back(intern_atom(Element::Kind::C, 0, 0));
    for (unsigned k = 1; k <= params.num_d(); ++k) {
      d_.push_back(intern_atom(Element::Kind::D, k, 0));
    }
  }

  std::size_t ElementPool::hash_node(Node const&   node,
                                     ElemId const* args) const noexcept {
    std::size_t h = mix64((std::size_t{node.kind} << 56) ^ (std::size_t{node.x} << 24)
                          ^ node.y);
    if (node.kind == kTagged) {
      for (unsigned i = 0; i < params_.n(); ++i) {
        h = mix64(h ^ (args[i] + 0x9e3779b97f4a7c15ULL * (i + 1)));
      }
    }
    return h;
  }

  bool ElementPool::same(ElemId        id,
                         Node const&   node,
                         ElemId const* args) const noexcept {
    Node const& other = nodes_[id];
    if (other.kind != node.kind || other.x != node.x || other.y != node.y) {
      return false;
    }
    if (node.kind != kTagged) {
      return true;
    }
    return std::equal(args, args + params_.n(), args_.data() + other.args);
  }

  void ElementPool::insert_slot(ElemId id) {
    Node const& nd = nodes_[id];
    std::size_t h
        = hash_node(nd, nd.kind == kTagged ? args_.data() + nd.args : nullptr);
    std::size_t pos = h & mask_;
    while (slots_[pos] != kNone) {
      pos = (pos + 1) & mask_;
    }
    slots_[pos] = id;
  }

  void ElementPool::grow() {
    slots_.assign(slots_.size() * 2, kNone);
    mask_ = slots_.size() - 1;
    // Re-inserting in id order keeps the table equal to the state reached by
    // inserting ids in increasing order, which rollback relies on.
    for (ElemId id = 0; id < nodes_.size(); ++id) {
      insert_slot(id);
    }
  }

  ElemId ElementPool::find_or_insert(Node const& node, ElemId const* args) {
    std::size_t pos = hash_node(node, args) & mask_;
    while (slots_[pos] != kNone) {
      if (same(slots_[pos], node, args)) {
        return slots_[pos];
      }
      pos = (pos + 1) & mask_;
    }
    if (nodes_.size() >= kNone - 1) {
      throw BudgetError("element pool exhausted the 32-bit id space");
    }
    auto id      = static_cast<ElemId>(nodes_.size());
    Node stored  = node;
    if (node.kind == kTagged) {
      stored.args = static_cast<std::uint32_t>(args_.size());
      args_.insert(args_.end(), args, args + params_.n());
    }
    nodes_.push_back(stored);
    if (2 * nodes_.size() > slots_.size()) {
      grow();
    } else {
      slots_[pos] = id;
    }
    return id;
  }

  ElemId ElementPool::intern_atom(Element::Kind kind, unsigned x, unsigned y) {
    Node node{static_cast<std::uint8_t>(kind), -1, x, y, 0};
    if (kind == Element::Kind::A && y == 0) {
      node.cycle_pos = static_cast<std::int8_t>(2 * (x - 1));
    } else if (kind == Element::Kind::B && y == 0) {
      node.cycle_pos = static_cast<std::int8_t>(2 * (x - 1) + 1);
    } else if (kind == Element::Kind::C) {
      node.cycle_pos = static_cast<std::int8_t>(2 * params_.n());
    }
    return find_or_insert(node, nullptr);
  }

  ElemId ElementPool::intern(Element const& e) {
    check_well_formed(e, params_);
    if (e.is_atom()) {
      switch (e.kind()) {
        case Element::Kind::A:
        case Element::Kind::B:
          return intern_atom(e.kind(), e.index(), e.shift());
        case Element::Kind::D:
          return d_[e.d_index() - 1];
        default:
          return c_id();
      }
    }
    std::vector<ElemId> ids;
    ids.reserve(params_.n());
    for (auto const& x : e.args()) {
      ids.push_back(intern(x));
    }
    Node node{kTagged, -1, e.tag(), 0, 0};
    return find_or_insert(node, ids.data());
  }

  Element ElementPool::element(ElemId id) const {
    Node const& nd = nodes_.at(id);
    switch (static_cast<Element::Kind>(nd.kind)) {
      case Element::Kind::A:
        return Element::a(nd.x, nd.y);
      case Element::Kind::B:
        return Element::b(nd.x, nd.y);
      case Element::Kind::D:
        return Element::d(nd.x);
      case Element::Kind::C:
        return Element::c();
      case Element::Kind::Tagged:
        break;
    }
    std::vector<Element> args;
    args.reserve(params_.n());
    for (unsigned i = 0; i < params_.n(); ++i) {
      args.push_back(element(args_[nd.args + i]));
    }
    return Element::tagged(std::move(args), nd.x);
  }

  PoolTriple ElementPool::intern(Triple const& t) {
    check_triple(t, params_);
    return {intern(t.p), intern(t.q), intern(t.r)};
  }

  bool ElementPool::in_dmn(std::span<ElemId const> args) const noexcept {
    unsigned const n = params_.n();
    for (unsigned i = 0; i < n; ++i) {
      int pos = nodes_[args[i]].cycle_pos;
      if (pos < 0 || static_cast<unsigned>(pos) >> 1 != i
          || static_cast<unsigned>(pos) >= 2 * n) {
        return false;
      }
    }
    return true;
  }

  ElemId ElementPool::f(std::span<ElemId const> args) {
    unsigned const n = params_.n();
    if (in_dmn(args)) {
      bool     all = true;
      unsigned k   = 0;
      for (unsigned i = 0; i < n; ++i) {
        bool bit = (nodes_[args[i]].cycle_pos & 1) != 0;
        all      = all && bit;
        if (i + 1 < n) {
          k = (k << 1) | (bit ? 1u : 0u);
        }
      }
      return all ? d_.back() : d_[k];
    }
    unsigned tag = 0;
    for (unsigned i = 0; i < n; ++i) {
      tag = std::max(tag, level(args[i]));
    }
    Node node{kTagged, -1, tag, 0, 0};
    return find_or_insert(node, args.data());
  }

  ElemId ElementPool::u_pqr(PoolTriple const& t, ElemId x) {
    if (x == t.p) {
      return t.q;
    }
    if (x == t.q) {
      return t.r;
    }
    if (x == t.r) {
      return t.p;
    }
    Node const& nd = nodes_[x];
    if (nd.kind <= static_cast<std::uint8_t>(Element::Kind::B)) {
      return intern_atom(static_cast<Element::Kind>(nd.kind), nd.x, nd.y + 1);
    }
    return x;
  }

  std::strong_ordering ElementPool::compare(ElemId lhs, ElemId rhs) const {
    if (lhs == rhs) {
      return std::strong_ordering::equal;
    }
    Node const& a = nodes_[lhs];
    Node const& b = nodes_[rhs];
    if (auto c = a.kind <=> b.kind; c != 0) {
      return c;
    }
    if (auto c = a.x <=> b.x; c != 0) {
      return c;
    }
    if (auto c = a.y <=> b.y; c != 0) {
      return c;
    }
    for (unsigned i = 0; i < params_.n(); ++i) {
      if (auto c = compare(args_[a.args + i], args_[b.args + i]); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  void ElementPool::rollback(Mark m) {
    if (m.nodes > nodes_.size()) {
      throw InvariantError("rollback past the end of the pool");
    }
    // Linear probing with deletions in reverse insertion order: each slot
    // can simply be cleared.
    while (nodes_.size() > m.nodes) {
      auto        id = static_cast<ElemId>(nodes_.size() - 1);
      Node const& nd = nodes_[id];
      std::size_t pos
          = hash_node(nd, nd.kind == kTagged ? args_.data() + nd.args : nullptr)
            & mask_;
      while (slots_[pos] != id) {
        pos = (pos + 1) & mask_;
      }
      slots_[pos] = kNone;
      nodes_.pop_back();
    }
    args_.resize(m.args);
  }

}  // namespace commlab
