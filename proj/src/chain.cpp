#include "commlab/chain.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

namespace commlab {

  std::string MalcevChain::to_string() const {
    std::ostringstream os;
    os << "source (" << source.first << ", " << source.second << ")";
    for (std::size_t k = 0; k < steps.size(); ++k) {
      auto const& s = steps[k];
      os << "; " << k + 1 << ": " << s.polynomial.body() << " on pair "
         << s.input << " -> (" << s.output.first << ", " << s.output.second
         << ")";
    }
    os << "; target (" << target.first << ", " << target.second << ")";
    return os.str();
  }

  namespace {

    class Builder {
     public:
      Builder(Params const& params, ElementPair source) : params_(params) {
        chain_.source = source;
        pairs_.push_back(std::move(source));
      }

      // Applies g to pair `input` and returns the new pair's index.
      std::size_t apply(UnaryPolynomial g, std::size_t input) {
        auto const& in = pairs_[input];
        ElementPair out{eval_poly(g, in.first, params_),
                        eval_poly(g, in.second, params_)};
        chain_.steps.push_back(ChainStep{std::move(g), input, out});
        pairs_.push_back(std::move(out));
        return pairs_.size() - 1;
      }

      ElementPair const& pair(std::size_t k) const {
        return pairs_[k];
      }

      MalcevChain finish(ElementPair target) {
        chain_.target = std::move(target);
        return std::move(chain_);
      }

     private:
      Params const&            params_;
      MalcevChain              chain_;
      std::vector<ElementPair> pairs_;
    };

    // Index of e in the u cycle c, a_1, b_1, ..., a_n, b_n: the k with
    // u^k(c) = e.
    unsigned cycle_steps(Element const& e) {
      return e.kind() == Element::Kind::A ? 2 * e.index() - 1 : 2 * e.index();
    }

  }  // namespace

  MalcevChain simplicity_chain(Params const&  params,
                               Element const& p,
                               Element const& q,
                               Element const& r) {
    check_well_formed(p, params);
    check_well_formed(q, params);
    check_well_formed(r, params);
    if (p == q) {
      throw DomainError("a simplicity chain needs p != q");
    }
    Builder     b(params, {p, q});
    std::size_t base = 0;
    if (p.in_B() || q.in_B()) {
      base = b.apply(UnaryPolynomial::diagonal_f(params), 0);
    }
    Element const pp = b.pair(base).first;
    Element const qq = b.pair(base).second;
    ElementPair   target{qq, r};

    if (r == pp || r == qq) {
      return b.finish(target);
    }
    if (!r.in_B()) {
      b.apply(UnaryPolynomial::upqr(Triple{pp, qq, r}), base);
      return b.finish(target);
    }

    // A pair relating z and c.
    Element const c = Element::c();
    Element const z = qq == c ? pp : qq;
    std::size_t   zc;
    if (pp == c || qq == c) {
      zc = base;
    } else {
      zc = b.apply(UnaryPolynomial::upqr(Triple{pp, qq, c}), base);
    }
    // u fixes z, so walking c along the cycle reaches a_i or b_i.
    Element const atom = r.kind() == Element::Kind::A
                             ? Element::a(r.index())
                             : Element::b(r.index());
    std::size_t cur = zc;
    for (unsigned k = 0; k < cycle_steps(atom); ++k) {
      cur = b.apply(UnaryPolynomial::u(), cur);
    }
    if (r.shift() > 0) {
      std::vector<Element> pool;
      for (unsigned k = 1; k <= params.num_d(); ++k) {
        pool.push_back(Element::d(k));
      }
      pool.push_back(c);
      std::erase(pool, z);
      Triple t{pool[0], pool[1], pool[2]};
      for (unsigned j = 0; j < r.shift(); ++j) {
        cur = b.apply(UnaryPolynomial::upqr(t), cur);
      }
    }
    return b.finish(target);
  }

  bool verify_chain(MalcevChain const& chain, Params const& params) noexcept {
    try {
      std::vector<ElementPair> pairs{chain.source};
      for (auto const& step : chain.steps) {
        if (step.input >= pairs.size()) {
          return false;
        }
        auto const& in = pairs[step.input];
        ElementPair out{eval_poly(step.polynomial, in.first, params),
                        eval_poly(step.polynomial, in.second, params)};
        if (out != step.output) {
          return false;
        }
        pairs.push_back(std::move(out));
      }
      if (chain.target.first == chain.target.second) {
        return true;
      }
      std::unordered_map<Element, std::size_t> index;
      auto id = [&](Element const& e) {
        return index.emplace(e, index.size()).first->second;
      };
      for (auto const& [x, y] : pairs) {
        id(x);
        id(y);
      }
      std::vector<std::size_t> parent(index.size());
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (auto const& [x, y] : pairs) {
        parent[find(id(x))] = find(id(y));
      }
      auto a = index.find(chain.target.first);
      auto b = index.find(chain.target.second);
      return a != index.end() && b != index.end()
             && find(a->second) == find(b->second);
    } catch (...) {
      return false;
    }
  }

}  // namespace commlab
