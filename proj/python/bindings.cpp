#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "chemgenus/error.hpp"
#include "chemgenus/formats.hpp"
#include "chemgenus/report.hpp"

namespace py = pybind11;
using namespace chemgenus;

namespace {

py::object to_python(const Tree& t) {
  switch (t.type()) {
    case Tree::value_t::null: return py::none();
    case Tree::value_t::boolean: return py::bool_(t.get<bool>());
    case Tree::value_t::number_integer: return py::int_(t.get<std::int64_t>());
    case Tree::value_t::number_unsigned: return py::int_(t.get<std::uint64_t>());
    case Tree::value_t::number_float: return py::float_(t.get<double>());
    case Tree::value_t::string: return py::str(t.get<std::string>());
    case Tree::value_t::array: {
      py::list l;
      for (const Tree& v : t)
        l.append(to_python(v));
      return std::move(l);
    }
    case Tree::value_t::object: {
      py::dict d;
      for (const auto& [k, v] : t.items())
        d[py::str(k)] = to_python(v);
      return std::move(d);
    }
    default: return py::none();
  }
}

// Parsed document with its molecule registry.
class Document {
public:
  explicit Document(DocumentSet doc) : doc_(std::move(doc)), registry_(doc_.molecules) {}

  static Document from_mdf(const std::string& text) { return Document(parse_document(text)); }
  static Document from_json(const std::string& text) { return Document(parse_document_json(text)); }
  static Document load(const std::filesystem::path& p) { return Document(load_document(p)); }

  std::vector<std::string> molecule_names() const { return registry_.names(); }
  std::vector<std::string> reactions() const {
    std::vector<std::string> out;
    for (const Reaction& r : doc_.reactions)
      out.push_back(render_reaction(r));
    return out;
  }
  py::object encode(const std::string& name) const {
    return to_python(to_tree(encode_molecule(registry_.resolve(name)), name));
  }
  py::object encode_side(const std::string& expr) const {
    Side side = parse_side_expr(expr);
    return to_python(to_tree(chemgenus::encode_side(side, registry_), render_side(side)));
  }
  py::object check(std::size_t index) const {
    return to_python(to_tree(check_reaction(reaction(index), registry_)));
  }
  py::object constraints(std::size_t index) const {
    return to_python(to_tree(derive_constraints(reaction(index), registry_)));
  }
  py::object solve(std::size_t index, std::vector<std::string> elements, int max_atoms,
                   std::uint64_t node_budget) const {
    UnknownConstraints c = derive_constraints(reaction(index), registry_);
    SolverOptions options;
    for (const std::string& s : elements)
      options.elements.push_back(lookup_element(s));
    options.max_atoms = max_atoms;
    options.node_budget = node_budget;
    Tree t;
    t["constraints"] = to_tree(c);
    t["candidates"] = Tree::array();
    for (const CandidateComposition& cand : enumerate_candidates(c, options))
      t["candidates"].push_back(to_tree(cand));
    return to_python(t);
  }
  std::string render() const { return render_document(doc_); }

private:
  const Reaction& reaction(std::size_t index) const {
    if (index < 1 || index > doc_.reactions.size())
      throw py::index_error("reaction index out of range (1-based)");
    return doc_.reactions[index - 1];
  }
  DocumentSet doc_;
  Registry registry_;
};

ResponseCurve make_curve(const std::vector<double>& t, const std::vector<double>& v) {
  if (t.size() != v.size())
    throw py::value_error("times and values differ in length");
  std::vector<Sample> samples;
  for (std::size_t i = 0; i < t.size(); ++i)
    samples.push_back({t[i], v[i]});
  return ResponseCurve(std::move(samples));
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Surface and bundle encoding of molecules and chemical reactions";

  static py::exception<Error> error(m, "ChemgenusError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p)
        std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("atomic_number", [](const std::string& s) { return lookup_element(s).atomic_number; },
        py::arg("symbol"));

  py::class_<Document>(m, "Document")
      .def_static("from_mdf", &Document::from_mdf, py::arg("text"))
      .def_static("from_json", &Document::from_json, py::arg("text"))
      .def_static("load", &Document::load, py::arg("path"))
      .def_property_readonly("molecule_names", &Document::molecule_names)
      .def_property_readonly("reactions", &Document::reactions)
      .def("encode", &Document::encode, py::arg("name"))
      .def("encode_side", &Document::encode_side, py::arg("side"))
      .def("check", &Document::check, py::arg("reaction"))
      .def("constraints", &Document::constraints, py::arg("reaction"))
      .def("solve", &Document::solve, py::arg("reaction"),
           py::arg("elements") = std::vector<std::string>{"H", "C", "N", "O", "S", "Cl", "Mg"},
           py::arg("max_atoms") = 6, py::arg("node_budget") = std::uint64_t{1'000'000})
      .def("render", &Document::render);

  m.def("tail_ratio",
        [](const std::vector<double>& t, const std::vector<double>& v, double T) {
          return tail_ratio(make_curve(t, v), T);
        },
        py::arg("times"), py::arg("values"), py::arg("T"));
  m.def("meets_threshold",
        [](const std::vector<double>& t, const std::vector<double>& v, double T, double eps) {
          return meets_threshold(make_curve(t, v), T, eps);
        },
        py::arg("times"), py::arg("values"), py::arg("T"), py::arg("epsilon"));
}
