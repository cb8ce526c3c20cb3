#include "commlab/element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace commlab {

  struct Element::Node {
    std::vector<Element> args;
    std::size_t          hash;
  };

  namespace {
    std::size_t mix(std::size_t h, std::size_t v) noexcept {
      // boost::hash_combine with a 64-bit constant
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4));
    }
  }  // namespace

  Element Element::a(unsigned i, unsigned j) {
    if (i == 0) {
      throw DomainError("a(i,j) requires i >= 1");
    }
    return Element(Kind::A, i, j);
  }

  Element Element::b(unsigned i, unsigned j) {
    if (i == 0) {
      throw DomainError("b(i,j) requires i >= 1");
    }
    return Element(Kind::B, i, j);
  }

  Element Element::d(unsigned k) {
    if (k == 0) {
      throw DomainError("d(k) requires k >= 1");
    }
    return Element(Kind::D, k, 0);
  }

  Element Element::tagged(std::vector<Element> args, unsigned tag) {
    if (args.size() < 2) {
      throw DomainError("a tagged element needs n >= 2 arguments");
    }
    unsigned lvl = commlab::level(std::span<Element const>(args));
    if (tag != lvl) {
      throw DomainError("tag " + std::to_string(tag)
                        + " differs from the level of the arguments ("
                        + std::to_string(lvl) + ")");
    }
    if (tag == 0) {
      bool in_domain = true;
      for (std::size_t i = 0; i < args.size() && in_domain; ++i) {
        in_domain = args[i].in_C() && args[i].index() == i + 1;
      }
      if (in_domain) {
        throw DomainError("arguments lie in dmn(f_0); f never yields a "
                          "tagged element for them");
      }
    }
    std::size_t h = mix(0x7a66, tag);
    for (auto const& x : args) {
      h = mix(h, x.hash());
    }
    Element e(Kind::Tagged, tag, 0);
    e.node_ = std::make_shared<Node const>(Node{std::move(args), h});
    return e;
  }

  std::span<Element const> Element::args() const noexcept {
    if (node_ == nullptr) {
      return {};
    }
    return node_->args;
  }

  std::size_t Element::hash() const noexcept {
    if (node_ != nullptr) {
      return node_->hash;
    }
    return mix(mix(static_cast<std::size_t>(kind_), x_), y_);
  }

  bool operator==(Element const& lhs, Element const& rhs) noexcept {
    if (lhs.kind_ != rhs.kind_ || lhs.x_ != rhs.x_ || lhs.y_ != rhs.y_) {
      return false;
    }
    if (lhs.node_ == rhs.node_) {
      return true;
    }
    if (lhs.node_->hash != rhs.node_->hash) {
      return false;
    }
    return lhs.node_->args == rhs.node_->args;
  }

  std::strong_ordering operator<=>(Element const& lhs,
                                   Element const& rhs) noexcept {
    if (auto c = lhs.kind_ <=> rhs.kind_; c != 0) {
      return c;
    }
    if (auto c = lhs.x_ <=> rhs.x_; c != 0) {
      return c;
    }
    if (auto c = lhs.y_ <=> rhs.y_; c != 0) {
      return c;
    }
    if (lhs.node_ == rhs.node_) {
      return std::strong_ordering::equal;
    }
    auto const& a = lhs.node_->args;
    auto const& b = rhs.node_->args;
    return std::lexicographical_compare_three_way(
        a.begin(), a.end(), b.begin(), b.end());
  }

  std::string Element::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Element const& e) {
    switch (e.kind()) {
      case Element::Kind::A:
        return os << "a(" << e.index() << ',' << e.shift() << ')';
      case Element::Kind::B:
        return os << "b(" << e.index() << ',' << e.shift() << ')';
      case Element::Kind::D:
        return os << "d(" << e.d_index() << ')';
      case Element::Kind::C:
        return os << 'c';
      case Element::Kind::Tagged: {
        os << "t([";
        auto args = e.args();
        for (std::size_t i = 0; i < args.size(); ++i) {
          os << (i ? "," : "") << args[i];
        }
        return os << "]," << e.tag() << ')';
      }
    }
    return os;
  }

  unsigned level(std::span<Element const> args) noexcept {
    unsigned lvl = 0;
    for (auto const& x : args) {
      lvl = std::max(lvl, x.level());
    }
    return lvl;
  }

  void check_well_formed(Element const& e, Params const& params) {
    switch (e.kind()) {
      case Element::Kind::A:
      case Element::Kind::B:
        if (e.index() < 1 || e.index() > params.n()) {
          throw DomainError("index out of range in " + e.to_string());
        }
        return;
      case Element::Kind::D:
        if (e.d_index() < 1 || e.d_index() > params.num_d()) {
          throw DomainError("index out of range in " + e.to_string());
        }
        return;
      case Element::Kind::C:
        return;
      case Element::Kind::Tagged:
        if (e.args().size() != params.n()) {
          throw DomainError("tagged element with " +
                            std::to_string(e.args().size())
                            + " arguments, expected n = "
                            + std::to_string(params.n()));
        }
        for (auto const& x : e.args()) {
          check_well_formed(x, params);
        }
        return;
    }
  }

  bool is_well_formed(Element const& e, Params const& params) noexcept {
    try {
      check_well_formed(e, params);
      return true;
    } catch (DomainError const&) {
      return false;
    }
  }

  namespace {
    void check_arity(std::span<Element const> args, Params const& params) {
      if (args.size() != params.n()) {
        throw SignatureError("f takes n = " + std::to_string(params.n())
                          + " arguments, got "
                          + std::to_string(args.size()));
      }
    }
  }  // namespace

  bool in_dmn_f0(std::span<Element const> args, Params const& params) {
    check_arity(args, params);
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!args[i].in_C() || args[i].index() != i + 1) {
        return false;
      }
    }
    return true;
  }

  Element f0_value(std::span<Element const> args, Params const& params) {
    if (!in_dmn_f0(args, params)) {
      throw DomainError("f_0 is undefined outside its domain");
    }
    unsigned const n   = params.n();
    bool           all = true;
    unsigned       k   = 0;
    for (unsigned i = 0; i < n; ++i) {
      bool bit = args[i].kind() == Element::Kind::B;
      all      = all && bit;
      if (i + 1 < n) {
        k = (k << 1) | (bit ? 1u : 0u);
      }
    }
    return Element::d(all ? params.num_d() : k + 1);
  }

  Element eval_f(std::span<Element const> args, Params const& params) {
    if (in_dmn_f0(args, params)) {
      return f0_value(args, params);
    }
    return Element::tagged(std::vector<Element>(args.begin(), args.end()),
                           level(args));
  }

  Element eval_u(Element const& e, Params const& params) {
    if (e.kind() == Element::Kind::C) {
      return Element::a(1);
    }
    if (!e.in_C()) {
      return e;
    }
    if (e.kind() == Element::Kind::A) {
      return Element::b(e.index());
    }
    return e.index() == params.n() ? Element::c() : Element::a(e.index() + 1);
  }

  bool is_valid_triple(Triple const& t) noexcept {
    return !t.p.in_B() && !t.q.in_B() && !t.r.in_B() && t.p != t.q
           && t.q != t.r && t.p != t.r;
  }

  void check_triple(Triple const& t, Params const& params) {
    if (!is_valid_triple(t)) {
      throw SignatureError("no symbol u_pqr for (" + t.p.to_string() + ", "
                           + t.q.to_string() + ", " + t.r.to_string()
                           + "): entries must be pairwise distinct and "
                             "outside B");
    }
    check_well_formed(t.p, params);
    check_well_formed(t.q, params);
    check_well_formed(t.r, params);
  }

  Element eval_u_pqr(Triple const& t, Element const& x, Params const& params) {
    check_triple(t, params);
    if (x == t.p) {
      return t.q;
    }
    if (x == t.q) {
      return t.r;
    }
    if (x == t.r) {
      return t.p;
    }
    if (x.kind() == Element::Kind::A) {
      return Element::a(x.index(), x.shift() + 1);
    }
    if (x.kind() == Element::Kind::B) {
      return Element::b(x.index(), x.shift() + 1);
    }
    return x;
  }

  std::vector<Element> base_atoms(Params const& params, unsigned j_max) {
    std::vector<Element> out;
    for (unsigned i = 1; i <= params.n(); ++i) {
      for (unsigned j = 0; j <= j_max; ++j) {
        out.push_back(Element::a(i, j));
      }
    }
    for (unsigned i = 1; i <= params.n(); ++i) {
      for (unsigned j = 0; j <= j_max; ++j) {
        out.push_back(Element::b(i, j));
      }
    }
    for (unsigned k = 1; k <= params.num_d(); ++k) {
      out.push_back(Element::d(k));
    }
    out.push_back(Element::c());
    return out;
  }

  std::vector<Element> bounded_subuniverse(Params const& params,
                                           unsigned      j_max,
                                           unsigned      closure_depth,
                                           std::size_t   cap) {
    auto current = base_atoms(params, j_max);
    if (current.size() > cap) {
      throw BudgetError("bounded subuniverse exceeds the element cap of "
                        + std::to_string(cap));
    }
    std::unordered_set<Element> seen(current.begin(), current.end());
    unsigned const              n = params.n();
    for (unsigned t = 0; t < closure_depth; ++t) {
      std::vector<Element>     next = current;
      std::vector<std::size_t> odometer(n, 0);
      std::vector<Element>     args(n, current.front());
      bool                     done = current.empty();
      while (!done) {
        for (unsigned i = 0; i < n; ++i) {
          args[i] = current[odometer[i]];
        }
        Element value = eval_f(args, params);
        if (seen.insert(value).second) {
          next.push_back(std::move(value));
          if (next.size() > cap) {
            throw BudgetError("bounded subuniverse exceeds the element cap of "
                              + std::to_string(cap));
          }
        }
        std::size_t pos = n;
        while (pos > 0) {
          --pos;
          if (++odometer[pos] < current.size()) {
            break;
          }
          odometer[pos] = 0;
          if (pos == 0) {
            done = true;
          }
        }
      }
      std::sort(next.begin(), next.end());
      current = std::move(next);
    }
    return current;
  }

  std::vector<Triple> triples_over(std::vector<Element> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    std::vector<Triple> out;
    for (auto const& p : elements) {
      for (auto const& q : elements) {
        for (auto const& r : elements) {
          Triple t{p, q, r};
          if (is_valid_triple(t)) {
            out.push_back(std::move(t));
          }
        }
      }
    }
    return out;
  }

  std::vector<Triple> default_triple_pool(Params const& params) {
    std::vector<Element> low;
    for (unsigned k = 1; k <= params.num_d(); ++k) {
      low.push_back(Element::d(k));
    }
    low.push_back(Element::c());
    return triples_over(std::move(low));
  }

}  // namespace commlab
