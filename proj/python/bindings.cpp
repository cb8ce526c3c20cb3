#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commlab/algebra_io.hpp"
#include "commlab/chain.hpp"
#include "commlab/commutator.hpp"
#include "commlab/cube.hpp"
#include "commlab/errors.hpp"
#include "commlab/report.hpp"
#include "commlab/tc_search.hpp"
#include "commlab/term.hpp"
#include "commlab/text.hpp"
#include "commlab/verifier.hpp"

namespace py = pybind11;
using namespace commlab;

namespace {

  Budget budget_or_default(std::optional<std::size_t> cap) {
    return cap ? Budget::from_cap(*cap) : Budget{};
  }

  py::dict report_dict(VerificationReport const& r) {
    py::dict params, counts, details;
    for (auto const& [k, v] : r.params) {
      params[py::str(k)] = v;
    }
    for (auto const& [k, v] : r.counts) {
      counts[py::str(k)] = v;
    }
    for (auto const& [k, v] : r.details) {
      details[py::str(k)] = v;
    }
    py::dict d;
    d["name"]    = r.name;
    d["params"]  = params;
    d["outcome"] = r.passed() ? "pass" : "fail";
    d["counterexample"]
        = r.counterexample ? py::object(py::str(*r.counterexample)) : py::none();
    d["counts"]  = counts;
    d["details"] = details;
    d["millis"]  = r.millis;
    return d;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Higher commutators of finite algebras and the constructed "
            "simple algebra A";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<SignatureError>(m, "SignatureError", base.ptr());
  py::register_exception<UnboundVariable>(m, "UnboundVariable", base.ptr());
  py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", base.ptr());

  py::class_<Params>(m, "Params")
      .def(py::init<unsigned>(), py::arg("n"))
      .def_property_readonly("n", &Params::n)
      .def_property_readonly("num_d", &Params::num_d)
      .def("__repr__", [](Params const& p) {
        return "Params(n=" + std::to_string(p.n()) + ")";
      });

  py::class_<Element>(m, "Element")
      .def_static("a", &Element::a, py::arg("i"), py::arg("j") = 0)
      .def_static("b", &Element::b, py::arg("i"), py::arg("j") = 0)
      .def_static("d", &Element::d, py::arg("k"))
      .def_static("c", &Element::c)
      .def_static("parse", &parse_element, py::arg("text"))
      .def_property_readonly("level", &Element::level)
      .def("in_B", &Element::in_B)
      .def("in_C", &Element::in_C)
      .def("__str__", &Element::to_string)
      .def("__repr__",
           [](Element const& e) { return "Element(" + e.to_string() + ")"; })
      .def("__eq__", [](Element const& x, Element const& y) { return x == y; })
      .def("__lt__", [](Element const& x, Element const& y) { return x < y; })
      .def("__hash__", &Element::hash);

  py::class_<Term>(m, "Term")
      .def_static("parse", &parse_term, py::arg("text"))
      .def_property_readonly("depth", &Term::depth)
      .def("variables", &Term::variables)
      .def("__str__", &Term::to_string)
      .def("__repr__",
           [](Term const& t) { return "Term(" + t.to_string() + ")"; })
      .def("__eq__", [](Term const& x, Term const& y) { return x == y; });

  m.def(
      "eval_term",
      [](Term const& t, std::vector<Element> const& a, unsigned n) {
        return eval_term(t, a, Params(n));
      },
      py::arg("term"),
      py::arg("assignment") = std::vector<Element>{},
      py::arg("n")          = 2);
  m.def(
      "evaluate",
      [](std::string const& text, unsigned n) {
        return eval_term(parse_term(text), {}, Params(n)).to_string();
      },
      py::arg("expression"),
      py::arg("n") = 2,
      "Evaluates closed term text and returns canonical element text.");
  m.def(
      "bounded_subuniverse",
      [](unsigned n, unsigned j_max, unsigned depth) {
        return bounded_subuniverse(Params(n), j_max, depth);
      },
      py::arg("n"),
      py::arg("j_max"),
      py::arg("closure_depth"));
  m.def(
      "base_atoms",
      [](unsigned n, unsigned j_max) { return base_atoms(Params(n), j_max); },
      py::arg("n"),
      py::arg("j_max") = 0);
  m.def(
      "f_cube",
      [](unsigned n) {
        Params const params(n);
        BlockAssignment<Element> blocks;
        std::vector<Term>        xs;
        for (unsigned i = 1; i <= n; ++i) {
          blocks.p.push_back({Element::a(i)});
          blocks.q.push_back({Element::b(i)});
          xs.push_back(Term::var(i - 1));
        }
        return term_cube(Term::f(xs), blocks, params).vertices();
      },
      py::arg("n"),
      "Vertices of the n-cube of f on blocks (a_i) / (b_i).");
  m.def(
      "is_tc_failure",
      [](std::vector<Element> vertices) {
        auto const size = vertices.size();
        unsigned   dim  = 0;
        while ((std::size_t{1} << dim) < size) {
          ++dim;
        }
        return is_tc_failure(Cube<Element>(dim, std::move(vertices)));
      },
      py::arg("vertices"));
  m.def(
      "search_tc_witness",
      [](unsigned                   dim,
         unsigned                   max_depth,
         unsigned                   block_len,
         std::vector<Element>       domain,
         unsigned                   n,
         unsigned                   threads,
         std::optional<std::size_t> budget) -> py::object {
        Params const  params(n);
        SearchOptions opts;
        opts.threads = threads;
        opts.budget  = budget_or_default(budget);
        auto res     = search_tc_witness(dim,
                                     max_depth,
                                     block_len,
                                     std::move(domain),
                                     default_triple_pool(params),
                                     params,
                                     opts);
        if (!res.witness) {
          return py::none();
        }
        py::dict w;
        w["term"]     = res.witness->term.to_string();
        w["p"]        = res.witness->blocks.p;
        w["q"]        = res.witness->blocks.q;
        w["vertices"] = res.witness->cube.vertices();
        return w;
      },
      py::arg("m"),
      py::arg("max_depth"),
      py::arg("block_len"),
      py::arg("domain"),
      py::arg("n"),
      py::arg("threads") = 1,
      py::arg("budget")  = py::none());

  py::class_<FiniteAlgebra>(m, "FiniteAlgebra")
      .def_static("from_json", &parse_algebra, py::arg("text"))
      .def_static("load", &load_algebra, py::arg("path"))
      .def_property_readonly("size", &FiniteAlgebra::size)
      .def("to_json", &algebra_to_json);

  py::class_<Congruence>(m, "Congruence")
      .def_static("identity", &Congruence::identity)
      .def_static("full", &Congruence::full)
      .def_static("from_blocks", &Congruence::from_blocks)
      .def_property_readonly("blocks", &Congruence::blocks)
      .def("is_identity", &Congruence::is_identity)
      .def("is_full", &Congruence::is_full)
      .def("related", &Congruence::related)
      .def("__str__", &Congruence::to_string)
      .def("__repr__",
           [](Congruence const& c) {
             return "Congruence(" + c.to_string() + ")";
           })
      .def("__eq__",
           [](Congruence const& x, Congruence const& y) { return x == y; });

  m.def(
      "cg",
      [](FiniteAlgebra const& alg, std::vector<Pair> const& pairs) {
        return cg(alg, pairs);
      },
      py::arg("algebra"),
      py::arg("pairs"));
  m.def(
      "higher_commutator",
      [](FiniteAlgebra const& alg, std::vector<Congruence> const& alphas) {
        return higher_commutator(alg, alphas);
      },
      py::arg("algebra"),
      py::arg("alphas"));
  m.def(
      "central_series",
      [](FiniteAlgebra const& alg, unsigned max_m) {
        return central_series(alg, max_m);
      },
      py::arg("algebra"),
      py::arg("max_m"));
  m.def(
      "supernilpotence_degree",
      [](FiniteAlgebra const& alg, unsigned max_m) {
        return supernilpotence_degree(alg, max_m);
      },
      py::arg("algebra"),
      py::arg("max_m"));
  m.def("is_simple", &is_simple, py::arg("algebra"));
  m.def(
      "tc_holds",
      [](FiniteAlgebra const& alg, unsigned dim, Congruence const& delta) {
        return tc_holds(alg, dim, delta);
      },
      py::arg("algebra"),
      py::arg("m"),
      py::arg("delta"));

  m.def(
      "check_simplicity_chains",
      [](unsigned n, unsigned samples, std::uint64_t seed) {
        Params const params(n);
        return report_dict(check_simplicity_chains(
            params, bounded_subuniverse(params, 1, 1), samples, seed));
      },
      py::arg("n")       = 2,
      py::arg("samples") = 50,
      py::arg("seed")    = 1);
  m.def(
      "paper_verify",
      [](unsigned                   n,
         std::optional<unsigned>    max_depth,
         std::uint64_t              seed,
         unsigned                   threads,
         std::optional<std::size_t> budget) {
        auto cfg = VerifierConfig::defaults_for(Params(n).n());
        if (max_depth) {
          cfg.max_depth = *max_depth;
        }
        cfg.seed           = seed;
        cfg.search.threads = threads;
        cfg.search.budget  = budget_or_default(budget);
        py::list out;
        for (auto const& r : run_paper_suite(cfg)) {
          out.append(report_dict(r));
        }
        return out;
      },
      py::arg("n")         = 2,
      py::arg("max_depth") = py::none(),
      py::arg("seed")      = 1,
      py::arg("threads")   = 1,
      py::arg("budget")    = py::none(),
      "Runs the verification suite and returns one dict per check.");
}
