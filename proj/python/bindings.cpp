#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loopnr/commands.hpp"
#include "loopnr/decomp.hpp"
#include "loopnr/io.hpp"

namespace py = pybind11;
using namespace loopnr;

namespace {

Limits limits_with(unsigned threads) {
  auto limits = Limits::from_env();
  if (threads) limits.threads = threads;
  return limits;
}

const LoopNearRing& need_nr(const Structure& s) {
  if (!s.nr) throw PreconditionFailed("structure is a near-ring");
  return *s.nr;
}

const FiniteRing& need_ring(const Structure& s) {
  if (!s.ring) throw PreconditionFailed("structure is a ring");
  return *s.ring;
}

std::vector<std::vector<Elem>> lists(const std::vector<ElementSubset>& family) {
  std::vector<std::vector<Elem>> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(s.members());
  return out;
}

py::tuple result(const CommandResult& r) { return py::make_tuple(r.exit_code, r.out, r.err); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite loops, loop near-rings and rings";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_RuntimeError);
  py::register_exception<TheoremFalsified>(m, "TheoremFalsified", PyExc_AssertionError);

  py::class_<Structure>(m, "Structure")
      .def_property_readonly("kind", [](const Structure& s) { return std::string(to_string(s.kind)); })
      .def_readonly("name", &Structure::name)
      .def_property_readonly("size", [](const Structure& s) { return s.loop.size(); })
      .def_property_readonly("add_table", [](const Structure& s) { return s.loop.add_table().rows(); })
      .def_property_readonly("mul_table",
                             [](const Structure& s) -> py::object {
                               if (!s.nr) return py::none();
                               return py::cast(s.nr->mul_table().rows());
                             })
      .def_property_readonly("one",
                             [](const Structure& s) -> py::object {
                               if (!s.nr) return py::none();
                               return py::cast(s.nr->one());
                             })
      .def("add", [](const Structure& s, Elem a, Elem b) { return s.loop.add(a, b); })
      .def("mul", [](const Structure& s, Elem a, Elem b) { return need_nr(s).mul(a, b); })
      .def("to_json", [](const Structure& s) { return serialize_structure_file(to_structure_file(s)); })
      .def("hash", &structure_hash)
      .def("__len__", [](const Structure& s) { return s.loop.size(); })
      .def("__repr__", [](const Structure& s) {
        return "<Structure " + s.name + " kind=" + std::string(to_string(s.kind)) + " n=" +
               std::to_string(s.loop.size()) + ">";
      });

  m.def("generate", [](const std::string& spec) { return generate(spec, Limits::from_env()); }, py::arg("spec"),
        "Build a structure from a generator spec such as 'cyclic:6' or 'm0:nonassoc5'.");
  m.def("load", [](const std::string& path_or_spec) { return load_structure(path_or_spec, Limits::from_env()); },
        py::arg("path_or_spec"));
  m.def("parse", [](const std::string& text) { return build_structure(parse_structure_file(text)); }, py::arg("text"),
        "Validate a structure given as JSON or plain text.");
  m.def("catalog", [] {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& e : catalog()) out.emplace_back(e.name, e.spec, e.description);
    return out;
  });

  m.def("is_associative", [](const Structure& s) { return is_associative(s.loop); });
  m.def(
      "subloops", [](const Structure& s, unsigned threads) { return lists(enumerate_subloops(s.loop, limits_with(threads))); },
      py::arg("structure"), py::arg("threads") = 0);
  m.def(
      "n_subloops",
      [](const Structure& s, unsigned threads) { return lists(enumerate_N_subloops(need_nr(s), limits_with(threads))); },
      py::arg("structure"), py::arg("threads") = 0);
  m.def("units", [](const Structure& s) { return units(need_nr(s)).members.members(); });
  m.def("idempotents", [](const Structure& s) { return idempotents(need_nr(s)).members(); });
  m.def(
      "is_local",
      [](const Structure& s, unsigned threads) {
        const auto r = is_local_lnr(need_nr(s), limits_with(threads));
        py::dict d;
        d["local"] = r.local();
        d["via_maximal"] = r.via_maximal;
        d["via_units"] = r.via_units;
        d["maximal"] = lists(r.maximal);
        return d;
      },
      py::arg("structure"), py::arg("threads") = 0);
  m.def("jacobson_radical", [](const Structure& s) {
    return jacobson_radical(need_ring(s), Limits::from_env()).members.members();
  });
  m.def("decompose", [](const Structure& s) { return decompose_regular(need_ring(s), Limits::from_env()).members; });
  m.def("primitive_families", [](const Structure& s, std::size_t limit) {
    std::vector<std::vector<Elem>> out;
    for (const auto& f : enumerate_complete_primitive_families(need_ring(s), limit, Limits::from_env()).families)
      out.push_back(f.members);
    return out;
  }, py::arg("structure"), py::arg("limit") = 100000);
  m.def("is_unit_reflecting", [](const Structure& src, const Structure& dst, std::vector<Elem> map) {
    const auto f = validate_lnr_hom(std::move(map), need_nr(src), need_nr(dst));
    const auto w = is_unit_reflecting(f);
    return py::make_tuple(w.holds, w.witness ? py::cast(*w.witness) : py::none());
  });

  // The CLI commands, returning (exit_code, stdout, stderr).
  m.def(
      "cmd_check", [](const std::string& path) { return result(cmd_check(path, Limits::from_env())); }, py::arg("path"));
  m.def(
      "cmd_analyze",
      [](const std::string& target, bool subloops, bool local, bool radical, bool idem, unsigned threads) {
        AnalyzeOptions o;
        o.subloops = subloops;
        o.local = local;
        o.radical = radical;
        o.idempotents = idem;
        return result(cmd_analyze(target, o, limits_with(threads)));
      },
      py::arg("target"), py::arg("subloops") = false, py::arg("local") = false, py::arg("radical") = false,
      py::arg("idempotents") = false, py::arg("threads") = 0);
  m.def(
      "cmd_decompose",
      [](const std::string& target, bool verify, unsigned threads) {
        DecomposeOptions o;
        o.verify_uniqueness = verify;
        return result(cmd_decompose(target, o, limits_with(threads)));
      },
      py::arg("target"), py::arg("verify_uniqueness") = false, py::arg("threads") = 0);
  m.def("cmd_generate", [](const std::string& spec) { return result(cmd_generate(spec, Limits::from_env())); });
}
