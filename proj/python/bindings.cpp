#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "sgg/bounds.hpp"
#include "sgg/error.hpp"
#include "sgg/genus.hpp"
#include "sgg/graph.hpp"
#include "sgg/group.hpp"
#include "sgg/group_spec.hpp"
#include "sgg/lattice.hpp"
#include "sgg/omega.hpp"

namespace py = pybind11;
using namespace sgg;

namespace {

py::object to_int(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_int(r.numerator()), to_int(r.denominator()));
}

EnumerationOptions enumeration(std::size_t order_cap, double timeout) {
  EnumerationOptions o;
  o.order_cap = order_cap;
  o.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(timeout * 1000));
  return o;
}

// pybind11 holders cannot point to const, so groups cross the boundary
// through a mutable alias. Nothing on the Python side mutates a table.
using PyGroup = std::shared_ptr<GroupTable>;

PyGroup expose(const GroupPtr& g) { return std::const_pointer_cast<GroupTable>(g); }

py::dict parameters(const OmegaFamily& f) {
  py::dict d;
  for (const auto& [k, v] : f.parameters()) d[py::str(k)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subgroup lattices, Omega-families and genus bounds.";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::handle(error.ptr())(py::str(e.what()));
      inst.attr("kind") = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<GroupTable, PyGroup>(m, "Group")
      .def_property_readonly("name", &GroupTable::name)
      .def_property_readonly("order", &GroupTable::order)
      .def_property_readonly("is_abelian", &GroupTable::is_abelian)
      .def("mul", &GroupTable::mul)
      .def("inv", &GroupTable::inv)
      .def("element_order", &GroupTable::element_order)
      .def("prime_divisors", &GroupTable::prime_divisors)
      .def("__repr__", [](const GroupTable& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("build_group", [](const std::string& spec, std::size_t cap) { return expose(build_group(spec, cap)); },
        py::arg("spec"), py::arg("order_cap") = kDefaultOrderCap,
        "Group from a spec such as 'D(6)', 'A(2,3)', 'PSL(2,7)' or 'C(2) x S(3)'.");
  m.def("canonical_spec", [](const std::string& text) { return render(parse_group_spec(text)); });

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init<std::size_t, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
      .def(py::init<std::vector<std::string>, std::vector<Edge>>(), py::arg("labels"), py::arg("edges"))
      .def_property_readonly("vertex_count", &SimpleGraph::vertex_count)
      .def_property_readonly("edge_count", &SimpleGraph::edge_count)
      .def_property_readonly("labels", &SimpleGraph::labels)
      .def_property_readonly("edges", &SimpleGraph::edges)
      .def("degree", &SimpleGraph::degree)
      .def("to_dot", [](const SimpleGraph& g, const std::string& name) { return to_dot(g, name); },
           py::arg("name") = "G")
      .def("to_json", [](const SimpleGraph& g) { return to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return graph_from_json(nlohmann::json::parse(s)); })
      .def("__eq__", [](const SimpleGraph& a, const SimpleGraph& b) { return a == b; })
      .def("__repr__", [](const SimpleGraph& g) {
        return "<Graph |V|=" + std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_graph", &cycle_graph);
  m.def("grid_graph", &grid_graph);
  m.def("hypercube", &hypercube);
  m.def("is_triangle_free", &is_triangle_free);
  m.def("is_bipartite", &is_bipartite);
  m.def("is_connected", &is_connected);
  m.def("is_planar", &is_planar);

  py::class_<Lattice>(m, "Lattice")
      .def_property_readonly("group", [](const Lattice& l) { return expose(l.group()); })
      .def("__len__", &Lattice::size)
      .def("orders", [](const Lattice& l) {
        std::vector<std::size_t> out;
        for (const auto& h : l.subgroups()) out.push_back(h.order());
        return out;
      })
      .def("elements", [](const Lattice& l, std::size_t i) {
        const auto e = l[i].elements();
        return std::vector<Element>(e.begin(), e.end());
      })
      .def("contains", &Lattice::contains, "True when subgroup i lies in subgroup j.")
      .def("census", &subgroup_census)
      .def("hasse_graph", &hasse_graph)
      .def("to_json", [](const Lattice& l) { return to_json(l).dump(); });

  m.def(
      "subgroup_lattice",
      [](const PyGroup& g, const std::string& algorithm, std::size_t order_cap, double timeout) {
        const auto o = enumeration(order_cap, timeout);
        if (algorithm == "cyclic-join") return all_subgroups(g, o);
        if (algorithm == "extension") return all_subgroups_by_extension(g, o);
        fail(ErrorKind::InvalidArgument, "unknown algorithm '" + algorithm + "'");
      },
      py::arg("group"), py::arg("algorithm") = "cyclic-join", py::arg("order_cap") = kDefaultOrderCap,
      py::arg("timeout") = 300.0);

  m.def("euler_lower_bound", [](const SimpleGraph& g) {
    const auto b = euler_lower_bound(g);
    return py::make_tuple(to_fraction(b.raw), to_int(b.integer));
  }, "(raw, integer) triangle-free Euler bound summed over components.");

  m.def(
      "exact_genus",
      [](const SimpleGraph& g, std::uint64_t max_nodes, double time_limit) -> std::optional<int> {
        GenusBudget b;
        b.max_nodes = max_nodes;
        b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
        py::gil_scoped_release release;
        return exact_genus(g, b).genus;
      },
      py::arg("graph"), py::arg("max_nodes") = 10'000'000, py::arg("time_limit") = 60.0,
      "Minimum orientable genus, or None when the budget runs out.");

  m.def("qbin", [](std::int64_t t, std::int64_t k, std::uint64_t p) { return to_int(qbin(t, k, p)); });
  m.def("ciclo_bound", [](unsigned t) { return to_fraction(ciclo_bound(t)); });
  m.def("ciclo_exact_euler", [](unsigned t) { return to_fraction(ciclo_exact_euler(t)); });
  m.def("rango_bound", [](std::uint64_t p, unsigned t) { return to_fraction(rango_bound(p, t)); });
  m.def("pls_bound", [](std::uint64_t q) {
    const auto b = pls_bound(q);
    py::dict d;
    d["q"] = b.params.q;
    d["n"] = b.params.n;
    d["a"] = b.params.a;
    d["b"] = b.params.b;
    d["raw"] = to_fraction(b.raw);
    d["n_over_24"] = to_fraction(b.floor_bound);
    return d;
  });

  py::class_<OmegaFamily>(m, "OmegaFamily")
      .def_property_readonly("kind", [](const OmegaFamily& f) { return std::string(to_string(f.kind())); })
      .def_property_readonly("parent", [](const OmegaFamily& f) { return expose(f.parent()); })
      .def_property_readonly("labels", &OmegaFamily::labels)
      .def_property_readonly("parameters", &parameters)
      .def("__len__", [](const OmegaFamily& f) { return f.members().size(); })
      .def("graph", &induced_omega_graph)
      .def("invariants", [](const OmegaFamily& f) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& c : check_family_invariants(f)) out.emplace_back(c.name, c.passed, c.detail);
        return out;
      })
      .def("bounds", [](const OmegaFamily& f) {
        const auto b = family_bounds(f);
        py::dict d;
        d["vertices"] = b.vertices;
        d["edges"] = b.edges;
        d["euler_raw"] = to_fraction(b.euler_raw);
        d["euler_integer"] = to_int(b.euler_integer);
        d["closed_form"] = b.has_closed_form ? to_fraction(b.closed_form) : py::none();
        return d;
      })
      .def("to_json", [](const OmegaFamily& f) { return to_json(f).dump(); });

  m.def("sylow_hypercube",
        [](const PyGroup& g, std::size_t order_cap) { return sylow_hypercube(g, enumeration(order_cap, 300)); },
        py::arg("group"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("rank_layer_family", &rank_layer_family, py::arg("p"), py::arg("t"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("psl_dihedral_family", &psl_dihedral_family, py::arg("q"), py::arg("order_cap") = kDefaultOrderCap);
  m.def("verify_psl_family", [](std::uint64_t q) {
    const auto v = verify_psl_family(q);
    py::dict d;
    d["q"] = v.q;
    d["n"] = v.n;
    d["a"] = v.a;
    d["b"] = v.b;
    d["lattice_size"] = v.lattice_size;
    d["vertices"] = v.vertices;
    d["edges"] = v.edges;
    d["passed"] = v.passed;
    return d;
  });

  m.attr("DEFAULT_ORDER_CAP") = kDefaultOrderCap;
}
