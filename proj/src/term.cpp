#include "commlab/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace commlab {

  struct Term::Node {
    Kind              kind  = Kind::Var;
    unsigned          index = 0;
    unsigned          depth = 0;
    bool              constants = false;
    Element           value;
    Triple            triple;
    std::vector<Term> children;
  };

  Term::Term() : node_(var(0).node_) {}

  Term Term::var(unsigned index) {
    auto node   = std::make_shared<Node>();
    node->kind  = Kind::Var;
    node->index = index;
    return Term(std::move(node));
  }

  Term Term::constant(Element value) {
    auto node       = std::make_shared<Node>();
    node->kind      = Kind::Const;
    node->value     = std::move(value);
    node->constants = true;
    return Term(std::move(node));
  }

  Term Term::u(Term arg) {
    auto node       = std::make_shared<Node>();
    node->kind      = Kind::U;
    node->depth     = arg.depth() + 1;
    node->constants = arg.has_constants();
    node->children.push_back(std::move(arg));
    return Term(std::move(node));
  }

  Term Term::upqr(Triple triple, Term arg) {
    if (!is_valid_triple(triple)) {
      throw SignatureError("no symbol u_pqr for the triple ("
                           + triple.p.to_string() + ", " + triple.q.to_string()
                           + ", " + triple.r.to_string() + ")");
    }
    auto node       = std::make_shared<Node>();
    node->kind      = Kind::UPQR;
    node->depth     = arg.depth() + 1;
    node->constants = arg.has_constants();
    node->triple    = std::move(triple);
    node->children.push_back(std::move(arg));
    return Term(std::move(node));
  }

  Term Term::f(std::vector<Term> args) {
    if (args.empty()) {
      throw DomainError("f needs at least one argument");
    }
    auto node  = std::make_shared<Node>();
    node->kind = Kind::F;
    for (auto const& a : args) {
      node->depth     = std::max(node->depth, a.depth() + 1);
      node->constants = node->constants || a.has_constants();
    }
    node->children = std::move(args);
    return Term(std::move(node));
  }

  Term::Kind Term::kind() const noexcept {
    return node_->kind;
  }
  unsigned Term::var_index() const noexcept {
    return node_->index;
  }
  Element const& Term::value() const noexcept {
    return node_->value;
  }
  Triple const& Term::triple() const noexcept {
    return node_->triple;
  }
  std::span<Term const> Term::children() const noexcept {
    return node_->children;
  }
  unsigned Term::depth() const noexcept {
    return node_->depth;
  }
  bool Term::has_constants() const noexcept {
    return node_->constants;
  }

  std::vector<unsigned> Term::variables() const {
    std::vector<unsigned> out;
    std::vector<Term>     stack{*this};
    while (!stack.empty()) {
      Term t = std::move(stack.back());
      stack.pop_back();
      if (t.kind() == Kind::Var) {
        out.push_back(t.var_index());
      }
      for (auto const& c : t.children()) {
        stack.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string Term::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Term const& t) {
    switch (t.kind()) {
      case Term::Kind::Var:
        return os << 'x' << t.var_index();
      case Term::Kind::Const:
        return os << t.value();
      case Term::Kind::U:
        return os << "u(" << t.children()[0] << ')';
      case Term::Kind::UPQR:
        return os << "upqr{" << t.triple().p << ';' << t.triple().q << ';'
                  << t.triple().r << "}(" << t.children()[0] << ')';
      case Term::Kind::F: {
        os << "f(";
        auto ch = t.children();
        for (std::size_t i = 0; i < ch.size(); ++i) {
          os << (i ? "," : "") << ch[i];
        }
        return os << ')';
      }
    }
    return os;
  }

  bool operator==(Term const& lhs, Term const& rhs) noexcept {
    return (lhs <=> rhs) == 0;
  }

  std::strong_ordering operator<=>(Term const& lhs, Term const& rhs) noexcept {
    if (lhs.node_ == rhs.node_) {
      return std::strong_ordering::equal;
    }
    if (auto c = lhs.depth() <=> rhs.depth(); c != 0) {
      return c;
    }
    if (auto c = lhs.kind() <=> rhs.kind(); c != 0) {
      return c;
    }
    switch (lhs.kind()) {
      case Term::Kind::Var:
        return lhs.var_index() <=> rhs.var_index();
      case Term::Kind::Const:
        return lhs.value() <=> rhs.value();
      case Term::Kind::UPQR:
        if (auto c = lhs.triple() <=> rhs.triple(); c != 0) {
          return c;
        }
        break;
      default:
        break;
    }
    auto a = lhs.children();
    auto b = rhs.children();
    return std::lexicographical_compare_three_way(
        a.begin(), a.end(), b.begin(), b.end());
  }

  Element eval_term(Term const& t, Assignment const& a, Params const& params) {
    switch (t.kind()) {
      case Term::Kind::Var:
        if (t.var_index() >= a.size()) {
          throw UnboundVariable("variable x" + std::to_string(t.var_index())
                                + " is not bound by the assignment");
        }
        return a[t.var_index()];
      case Term::Kind::Const:
        return t.value();
      case Term::Kind::U:
        return eval_u(eval_term(t.children()[0], a, params), params);
      case Term::Kind::UPQR:
        return eval_u_pqr(
            t.triple(), eval_term(t.children()[0], a, params), params);
      case Term::Kind::F: {
        std::vector<Element> args;
        args.reserve(t.children().size());
        for (auto const& c : t.children()) {
          args.push_back(eval_term(c, a, params));
        }
        return eval_f(args, params);
      }
    }
    throw InvariantError("unknown term kind");
  }

  UnaryPolynomial::UnaryPolynomial(Term body) : body_(std::move(body)) {
    auto vars = body_.variables();
    if (vars.size() != 1 || vars[0] != 0) {
      throw DomainError("a unary polynomial must have exactly the free "
                        "variable x0: "
                        + body_.to_string());
    }
  }

  UnaryPolynomial UnaryPolynomial::diagonal_f(Params const& params) {
    return UnaryPolynomial(
        Term::f(std::vector<Term>(params.n(), Term::var(0))));
  }

  UnaryPolynomial UnaryPolynomial::u() {
    return UnaryPolynomial(Term::u(Term::var(0)));
  }

  UnaryPolynomial UnaryPolynomial::upqr(Triple const& t) {
    return UnaryPolynomial(Term::upqr(t, Term::var(0)));
  }

  Element eval_poly(UnaryPolynomial const& g,
                    Element const&         x,
                    Params const&          params) {
    return eval_term(g.body(), Assignment{x}, params);
  }

  Element u_power(Element x, unsigned m, Params const& params) {
    m %= params.cycle_length();
    for (unsigned i = 0; i < m; ++i) {
      x = eval_u(x, params);
    }
    return x;
  }

  std::optional<std::pair<unsigned, unsigned>>
  is_power_of_u_on(Term const&                 t,
                   std::span<Assignment const> samples,
                   unsigned                    max_power,
                   Params const&               params) {
    if (samples.empty()) {
      throw DomainError("is_power_of_u_on needs at least one sample");
    }
    std::size_t num_vars = samples[0].size();
    for (auto const& s : samples) {
      num_vars = std::min(num_vars, s.size());
    }
    std::vector<Element> values;
    values.reserve(samples.size());
    for (auto const& s : samples) {
      values.push_back(eval_term(t, s, params));
    }
    for (unsigned i = 0; i < num_vars; ++i) {
      for (unsigned m = 0; m <= max_power; ++m) {
        bool ok = true;
        for (std::size_t s = 0; s < samples.size() && ok; ++s) {
          ok = values[s] == u_power(samples[s][i], m, params);
        }
        if (ok) {
          return std::make_pair(i, m);
        }
      }
    }
    return std::nullopt;
  }

}  // namespace commlab
