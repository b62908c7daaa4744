#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "menger/errors.hpp"
#include "menger/io.hpp"
#include "menger/kernel.hpp"
#include "menger/order.hpp"
#include "menger/pfunc.hpp"
#include "menger/reprs.hpp"
#include "menger/terms.hpp"

namespace py = pybind11;
using namespace menger;

namespace {

  using Cells = std::vector<PartialNFunction::Cell>;

  struct PyAlgebra {
    std::vector<std::string> labels;
    SubtractionMengerAlgebra algebra;
  };

  struct PyRepresentation {
    Representation           rep;
    std::vector<std::string> labels;
  };

  std::vector<Cells> to_cells(FunctionAlgebra const& f) {
    std::vector<Cells> out;
    for (auto const& g : f.elements()) {
      out.emplace_back(g.cells().begin(), g.cells().end());
    }
    return out;
  }

  std::vector<PartialNFunction> from_cells(std::size_t base, std::size_t rank, std::vector<Cells> const& fs) {
    std::vector<PartialNFunction> out;
    for (auto const& c : fs) {
      out.emplace_back(base, rank, c);
    }
    return out;
  }

  CheckOptions opts(std::size_t max_witnesses) {
    return CheckOptions{max_witnesses};
  }

}  // namespace

PYBIND11_MODULE(_menger, m) {
  m.doc() = "Finite subtraction Menger algebras";

  auto base_error = py::register_exception<Error>(m, "MengerError", PyExc_ValueError);
  py::register_exception<ClosureCapExceeded>(m, "ClosureCapExceeded", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<VerificationFailed>(m, "VerificationFailed", base_error.ptr());

  py::class_<Witness>(m, "Witness")
      .def_readonly("axiom", &Witness::axiom)
      .def_readonly("tuple", &Witness::tuple)
      .def("__repr__", [](Witness const& w) {
        std::ostringstream s;
        s << w;
        return s.str();
      });

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("holds", &CheckReport::holds)
      .def_readonly("witnesses", &CheckReport::witnesses)
      .def_readonly("checked_count", &CheckReport::checked_count)
      .def("witnesses_for", &CheckReport::witnesses_for)
      .def("__bool__", [](CheckReport const& r) { return r.holds; });

  py::class_<PyAlgebra>(m, "Algebra")
      .def(py::init([](std::size_t rank, std::size_t size, std::vector<Element> table, std::vector<Element> sub,
                       Element zero) {
             return PyAlgebra{io::index_labels(size),
                              SubtractionMengerAlgebra(FiniteMengerAlgebra(rank, size, std::move(table)), std::move(sub), zero)};
           }),
           py::arg("rank"), py::arg("size"), py::arg("table"), py::arg("subtraction"), py::arg("zero"))
      .def_static("from_json",
                  [](std::string const& text) {
                    auto doc = io::parse_algebra(text);
                    return PyAlgebra{std::move(doc.labels), std::move(doc.algebra)};
                  })
      .def("to_json", [](PyAlgebra const& a) { return io::dump_algebra({a.labels, a.algebra}); })
      .def_property_readonly("rank", [](PyAlgebra const& a) { return a.algebra.rank(); })
      .def_property_readonly("size", [](PyAlgebra const& a) { return a.algebra.size(); })
      .def_property_readonly("zero", [](PyAlgebra const& a) { return a.algebra.zero(); })
      .def_readonly("labels", &PyAlgebra::labels)
      .def("op", [](PyAlgebra const& a, Element x, std::vector<Element> const& ys) { return a.algebra.menger().at(x, ys); })
      .def("sub", [](PyAlgebra const& a, Element x, Element y) { return a.algebra.sub(x, y); })
      .def("__len__", [](PyAlgebra const& a) { return a.algebra.size(); });

  m.def(
      "check_superassociativity",
      [](PyAlgebra const& a, std::size_t k) { return check_superassociativity(a.algebra.menger(), opts(k)); },
      py::arg("algebra"), py::arg("max_witnesses") = 10);
  m.def(
      "check_subtraction_axioms",
      [](PyAlgebra const& a, std::size_t k) { return check_subtraction_axioms(a.algebra, opts(k)); },
      py::arg("algebra"), py::arg("max_witnesses") = 10);
  m.def(
      "check_compat_axioms",
      [](PyAlgebra const& a, std::size_t k) {
        return check_compat_axioms(a.algebra, translations(a.algebra.menger()), opts(k));
      },
      py::arg("algebra"), py::arg("max_witnesses") = 10);
  m.def(
      "check_derived_identities",
      [](PyAlgebra const& a, std::size_t k) {
        return check_derived_identities(a.algebra, translations(a.algebra.menger()), opts(k));
      },
      py::arg("algebra"), py::arg("max_witnesses") = 10);
  m.def(
      "check_all",
      [](PyAlgebra const& a, std::size_t k) {
        return VerifiedAlgebra::check_all(a.algebra, translations(a.algebra.menger()), opts(k));
      },
      py::arg("algebra"), py::arg("max_witnesses") = 10);

  m.def(
      "translations",
      [](PyAlgebra const& a) {
        auto const maps = translations(a.algebra.menger()).as_set();
        return std::vector<std::vector<Element>>(maps.begin(), maps.end());
      },
      py::arg("algebra"), "Induced maps of all polynomials, as value lists, sorted.");

  m.def(
      "close",
      [](std::size_t base, std::size_t rank, std::vector<Cells> const& gens, std::size_t cap) {
        return to_cells(close(base, rank, from_cells(base, rank, gens), cap));
      },
      py::arg("base_size"), py::arg("rank"), py::arg("generators"), py::arg("cap") = kDefaultFunctionCap,
      "Closure under superposition and difference; functions are cell lists with -1 for undefined.");
  m.def(
      "all_partial_functions",
      [](std::size_t base, std::size_t rank, std::size_t cap) { return to_cells(all_partial_functions(base, rank, cap)); },
      py::arg("base_size"), py::arg("rank"), py::arg("cap") = kDefaultFunctionCap);
  m.def(
      "random_closed_algebra",
      [](std::size_t base, std::size_t rank, std::size_t count, std::uint64_t seed, std::size_t cap) {
        return to_cells(random_closed_algebra(base, rank, count, seed, cap));
      },
      py::arg("base_size"), py::arg("rank"), py::arg("count"), py::arg("seed"), py::arg("cap") = kDefaultFunctionCap);
  m.def(
      "concretize",
      [](std::size_t base, std::size_t rank, std::vector<Cells> const& fs) {
        FunctionAlgebra f(base, rank);
        for (auto& g : from_cells(base, rank, fs)) {
          f.insert(std::move(g));
        }
        return PyAlgebra{io::index_labels(f.size()), make_abstract(f)};
      },
      py::arg("base_size"), py::arg("rank"), py::arg("functions"),
      "Abstract algebra of a closed set of functions; element i is functions[i].");

  py::class_<PyRepresentation>(m, "Representation")
      .def_property_readonly("rank", [](PyRepresentation const& r) { return r.rep.rank(); })
      .def_property_readonly("base",
                             [](PyRepresentation const& r) {
                               std::vector<std::string> out;
                               for (auto const& p : r.rep.base()) {
                                 out.push_back(p.to_string(r.labels));
                               }
                               return out;
                             })
      .def_property_readonly("provenance", [](PyRepresentation const& r) { return r.rep.provenance(); })
      .def_property_readonly("verified", [](PyRepresentation const& r) { return r.rep.verified(); })
      .def_property_readonly("verification", [](PyRepresentation const& r) { return r.rep.verification(); })
      .def("graph", [](PyRepresentation const& r, Element g) { return r.rep.graph(g); })
      .def("undefine", [](PyRepresentation& r, Element g, std::size_t s) { r.rep.undefine(g, s); })
      .def("to_json", [](PyRepresentation const& r) { return io::dump_representation(io::to_doc(r.rep, r.labels)); });

  m.def(
      "represent",
      [](PyAlgebra const& a, std::string const& tie) {
        if (tie != "least" && tie != "greatest") {
          throw py::value_error("tiebreak must be 'least' or 'greatest'");
        }
        auto v = VerifiedAlgebra::verify(a.algebra);
        return PyRepresentation{theorem2_pipeline(v, tie == "least" ? TieBreak::least : TieBreak::greatest), a.labels};
      },
      py::arg("algebra"), py::arg("tiebreak") = "least");
  m.def(
      "verify_representation",
      [](PyAlgebra const& a, PyRepresentation const& r, std::size_t k) {
        return verify_representation(a.algebra, r.rep, opts(k));
      },
      py::arg("algebra"), py::arg("representation"), py::arg("max_witnesses") = 10);
}
