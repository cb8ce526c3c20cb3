#include "commlab/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace commlab {

  Congruence Congruence::identity(std::size_t s) {
    std::vector<std::uint32_t> labels(s);
    std::iota(labels.begin(), labels.end(), 0u);
    return from_labels(labels);
  }

  Congruence Congruence::full(std::size_t s) {
    return from_labels(std::vector<std::uint32_t>(s, 0));
  }

  Congruence Congruence::from_labels(std::span<std::uint32_t const> labels) {
    Congruence                 c;
    std::vector<std::uint32_t> renumber;
    std::vector<std::uint32_t> seen;
    c.label_.resize(labels.size());
    // Numbering blocks by first occurrence numbers them by least element.
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find(seen.begin(), seen.end(), labels[x]);
      std::uint32_t b;
      if (it == seen.end()) {
        b = static_cast<std::uint32_t>(seen.size());
        seen.push_back(labels[x]);
        c.blocks_.emplace_back();
      } else {
        b = static_cast<std::uint32_t>(it - seen.begin());
      }
      c.label_[x] = b;
      c.blocks_[b].push_back(static_cast<std::uint32_t>(x));
    }
    return c;
  }

  Congruence
  Congruence::from_blocks(std::size_t                             s,
                          std::vector<std::vector<std::uint32_t>> blocks) {
    std::vector<std::uint32_t> labels(s, 0xFFFF'FFFFu);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw DomainError("a partition block is empty");
      }
      for (auto x : blocks[b]) {
        if (x >= s) {
          throw DomainError("element " + std::to_string(x)
                            + " is outside the universe of size "
                            + std::to_string(s));
        }
        if (labels[x] != 0xFFFF'FFFFu) {
          throw DomainError("element " + std::to_string(x)
                            + " lies in two blocks");
        }
        labels[x] = static_cast<std::uint32_t>(b);
      }
    }
    for (std::size_t x = 0; x < s; ++x) {
      if (labels[x] == 0xFFFF'FFFFu) {
        throw DomainError("element " + std::to_string(x)
                          + " lies in no block");
      }
    }
    return from_labels(labels);
  }

  bool Congruence::refines(Congruence const& other) const noexcept {
    if (other.size() != size()) {
      return false;
    }
    for (auto const& b : blocks_) {
      for (auto x : b) {
        if (!other.related(b.front(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Pair> Congruence::generators() const {
    std::vector<Pair> out;
    for (auto const& b : blocks_) {
      for (std::size_t i = 1; i < b.size(); ++i) {
        out.emplace_back(b.front(), b[i]);
      }
    }
    return out;
  }

  std::string Congruence::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      os << (b ? "," : "") << '{';
      for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
        os << (i ? "," : "") << blocks_[b][i];
      }
      os << '}';
    }
    os << '}';
    return os.str();
  }

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
      }
      std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }
      bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent_[y] = x;
        return true;
      }

     private:
      std::vector<std::uint32_t> parent_;
    };
  }  // namespace

  Congruence cg(FiniteAlgebra const& alg, std::span<Pair const> pairs) {
    std::size_t const s = alg.size();
    UnionFind         uf(s);
    std::vector<Pair> work;
    for (auto const& [x, y] : pairs) {
      if (x >= s || y >= s) {
        throw DomainError("pair (" + std::to_string(x) + ", "
                          + std::to_string(y)
                          + ") is outside the universe of size "
                          + std::to_string(s));
      }
      if (uf.unite(x, y)) {
        work.emplace_back(x, y);
      }
    }
    // Every merge is recorded as a pair; the relation is the equivalence
    // closure of the recorded pairs, so closing the recorded pairs under
    // basic translations closes the whole relation.
    std::vector<std::uint32_t> args;
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      for (std::size_t op = 0; op < alg.operations().size(); ++op) {
        unsigned const k = alg.operations()[op].arity;
        if (k == 0) {
          continue;
        }
        std::size_t others = 1;
        for (unsigned i = 1; i < k; ++i) {
          others *= s;
        }
        args.assign(k, 0);
        for (unsigned pos = 0; pos < k; ++pos) {
          for (std::size_t c = 0; c < others; ++c) {
            std::size_t rest = c;
            for (unsigned i = k; i-- > 0;) {
              if (i == pos) {
                continue;
              }
              args[i] = static_cast<std::uint32_t>(rest % s);
              rest /= s;
            }
            args[pos]       = x;
            std::uint32_t a = alg.apply(op, args);
            args[pos]       = y;
            std::uint32_t b = alg.apply(op, args);
            if (uf.unite(a, b)) {
              work.emplace_back(a, b);
            }
          }
        }
      }
    }
    std::vector<std::uint32_t> labels(s);
    for (std::uint32_t x = 0; x < s; ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(labels);
  }

  bool is_compatible(FiniteAlgebra const& alg, Congruence const& theta) {
    if (theta.size() != alg.size()) {
      return false;
    }
    return cg(alg, theta.generators()) == theta;
  }

}  // namespace commlab
