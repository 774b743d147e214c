// Complexes, maps and results cross the boundary as canonical JSON text; the
// Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellx/errors.hpp"
#include "cellx/io.hpp"
#include "cellx/lattice.hpp"
#include "cellx/ops.hpp"
#include "cellx/oracle.hpp"
#include "cellx/random.hpp"
#include "cellx/reduce.hpp"

namespace py = pybind11;
using namespace cellx;

namespace {

ChainComplex complex_in(const std::string& text, bool force = false) {
  ParseOptions o;
  o.force = force;
  return complex_from_json(Json::parse(text), o);
}

std::string out(const Json& j) { return j.dump(); }

std::string verdict_out(const Verdict& v) {
  Json j = to_json(v);
  j["explanation"] = explain(v);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_cellx, m) {
  m.doc() = "Decomposition and cellularity of perfect complexes over Z/p^2 and F_p[X]/(X^2)";

  static py::exception<InvalidComplex> invalid(m, "InvalidComplexError", PyExc_ValueError);
  static py::exception<GuardRefusal> refused(m, "GuardRefusalError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidComplex& e) {
      py::set_error(invalid, e.what());
    } catch (const GuardRefusal& e) {
      py::set_error(refused, e.what());
    } catch (const UsageError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Json::exception& e) {
      py::set_error(invalid, e.what());
    }
  });

  m.def("interval", [](const std::string& ring, int i, int j) {
    return out(to_json(interval(RingSpec::parse(ring), i, j)));
  });
  m.def("sphere", [](const std::string& ring, int n) {
    return out(to_json(sphere(RingSpec::parse(ring), n)));
  });
  m.def("disk", [](const std::string& ring, int n) {
    return out(to_json(disk(RingSpec::parse(ring), n)));
  });

  m.def("validate", [](const std::string& x) -> py::object {
    const auto diag = validate(complex_in(x, true));
    if (!diag) return py::none();
    return py::make_tuple(diag->degree, diag->message);
  });
  m.def("homology", [](const std::string& x) { return out(to_json(homology(complex_in(x)))); });
  m.def("brute_homology", [](const std::string& x, std::size_t max_elements) {
    return out(to_json(brute_homology(complex_in(x), max_elements)));
  });
  m.def("minimize", [](const std::string& x) { return out(to_json(minimize(complex_in(x)))); });
  m.def("decompose", [](const std::string& x) { return out(to_json(decompose(complex_in(x)))); });

  m.def("is_cellular", [](const std::string& x, const std::string& a) {
    return verdict_out(is_cellular(complex_in(x), complex_in(a)));
  });
  m.def("is_acyclic_over", [](const std::string& x, const std::string& a) {
    return verdict_out(is_acyclic_over(complex_in(x), complex_in(a)));
  });
  m.def("generator_relation", &generator_relation);

  m.def("shift", [](const std::string& x, int n) { return out(to_json(shift(complex_in(x), n))); });
  m.def("direct_sum", [](const std::string& x, const std::string& y) {
    return out(to_json(direct_sum(complex_in(x), complex_in(y))));
  });
  m.def("tensor", [](const std::string& x, const std::string& y) {
    return out(to_json(tensor(complex_in(x), complex_in(y))));
  });
  m.def("hom_complex", [](const std::string& x, const std::string& y) {
    return out(to_json(hom_complex(complex_in(x), complex_in(y))));
  });
  m.def("cone", [](const std::string& f) {
    return out(to_json(cone(chain_map_from_json(Json::parse(f)))));
  });

  m.def("cross_check", [](const std::string& x, const std::string& a, std::uint64_t guard) {
    const auto c = cross_check(complex_in(x), complex_in(a), SizeGuard{guard});
    return out(agreement_entry("X", "A", c, 0));
  });
  m.def("random_complex", [](const std::string& ring, std::uint64_t seed, int max_degree,
                             std::size_t max_rank, bool allow_units) {
    Rng rng(seed);
    const RandomComplexOptions opts{max_degree, max_rank};
    const auto spec = RingSpec::parse(ring);
    return out(to_json(allow_units ? random_complex_with_units(spec, opts, rng)
                                   : random_minimal_complex(spec, opts, rng)));
  });
  m.def("random_extension", [](const std::string& x, const std::string& z, std::uint64_t seed) {
    const auto e = random_extension(complex_in(x), complex_in(z), seed);
    Json j;
    j["extension"] = to_json(e.extension);
    j["connecting"] = Json::array();
    for (const auto& h : e.connecting) j["connecting"].push_back(to_json(h));
    j["seed"] = e.seed;
    return out(j);
  });
}
