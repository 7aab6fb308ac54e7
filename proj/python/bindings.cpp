#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "honeycomb/feasibility.hpp"
#include "honeycomb/horn.hpp"
#include "honeycomb/io.hpp"
#include "honeycomb/lattice.hpp"
#include "honeycomb/overlay.hpp"
#include "honeycomb/render.hpp"
#include "honeycomb/service.hpp"
#include "honeycomb/spectral.hpp"

namespace py = pybind11;
using namespace honeycomb;

namespace {

// Anything whose str() parses as a rational: int, Fraction, "3/2", "0.25".
Rat to_rat(const py::handle& v) { return Rat::parse(py::str(v).cast<std::string>()); }

Spectrum to_spectrum(const py::sequence& s) {
  std::vector<Rat> v;
  for (const auto& x : s) v.push_back(to_rat(x));
  return Spectrum(std::move(v));
}

py::object fraction(const Rat& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.str());
}

py::list fractions(const std::vector<Rat>& v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

py::object big(const BigInt& v) { return py::int_(py::str(v.get_str())); }

std::string dump(const io::Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Honeycombs, Horn inequalities and Littlewood-Richardson coefficients";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "HoneycombError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(), py::make_tuple(std::string(to_string(e.code())), e.what()));
    }
  });

  py::class_<Honeycomb>(m, "Honeycomb")
      .def_static("from_json", [](const std::string& s) { return io::honeycomb_from_json(io::Json::parse(s)); })
      .def("to_json", [](const Honeycomb& h) { return dump(io::to_json(h)); })
      .def_property_readonly("n", &Honeycomb::n)
      .def("coords", [](const Honeycomb& h) {
        py::dict d;
        for (std::size_t e = 0; e < h.coords().size(); ++e) d[py::str(h.graph().edges()[e].key)] = fraction(h.coord(e));
        return d;
      })
      .def("edge_lengths", [](const Honeycomb& h) {
        py::dict d;
        for (std::size_t e : h.graph().internal_edges()) d[py::str(h.graph().edges()[e].key)] = fraction(edge_length(h, e));
        return d;
      })
      .def("boundary", [](const Honeycomb& h) {
        const auto b = boundary(h);
        return py::make_tuple(fractions(b.lambda), fractions(b.mu), fractions(b.nu));
      })
      .def("in_cone", &Honeycomb::in_cone)
      .def("is_integral", [](const Honeycomb& h) { return is_integral(h); })
      .def("__eq__", [](const Honeycomb& a, const Honeycomb& b) { return a == b; })
      .def("__repr__", [](const Honeycomb& h) { return "<Honeycomb n=" + std::to_string(h.n()) + ">"; });

  // Feasibility. Triple convention unless the name says "sum".
  m.def("decide_sum", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return decide_sum(to_spectrum(l), to_spectrum(u), to_spectrum(v));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("decide_triple", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return decide_triple(to_spectrum(l), to_spectrum(u), to_spectrum(v));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("boundary_distance", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return fraction(boundary_distance(to_spectrum(l), to_spectrum(u), to_spectrum(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("largest_lift", [](const py::sequence& l, const py::sequence& u, const py::sequence& v, std::uint64_t seed) {
    const auto lam = to_spectrum(l), mu = to_spectrum(u), nu = to_spectrum(v);
    return largest_lift(lam, mu, nu, superharmonic_weights(build_graph(static_cast<int>(lam.size())), seed));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("seed") = 1);
  m.def("check_saturation", [](const py::sequence& l, const py::sequence& u, const py::sequence& v, std::uint64_t seed) {
    return dump(io::to_json(check_saturation(to_spectrum(l), to_spectrum(u), to_spectrum(v), seed)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("seed") = 1);

  // Counting.
  m.def("count_integral_triple", [](const py::sequence& l, const py::sequence& u, const py::sequence& v, unsigned threads) {
    return big(count_integral_triple(to_spectrum(l), to_spectrum(u), to_spectrum(v), threads));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("threads") = 1);
  m.def("tensor_multiplicity", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return big(tensor_multiplicity(to_spectrum(l), to_spectrum(u), to_spectrum(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("lr_oracle", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return big(lr_oracle(to_spectrum(l), to_spectrum(u), to_spectrum(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));
  m.def("enumerate_integral", [](const py::sequence& l, const py::sequence& u, const py::sequence& v, std::size_t limit) {
    return enumerate_integral(to_spectrum(l), to_spectrum(u), to_spectrum(v), limit);
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"), py::arg("limit") = 100);

  // Horn.
  m.def("horn_inequalities", [](int n) {
    io::Json arr = io::Json::array();
    for (const auto& h : horn_inequalities(n)) arr.push_back(io::to_json(h));
    return dump(arr);
  }, py::arg("n"));
  m.def("decide_by_horn", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return decide_by_horn(to_spectrum(l), to_spectrum(u), to_spectrum(v));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));

  // Overlays.
  m.def("analyze_overlay", [](const Honeycomb& a, const Honeycomb& b) {
    return dump(io::overlay_to_json(analyze_overlay(a, b), a.graph(), b.graph()));
  });
  m.def("facet_inequality", [](const Honeycomb& a, const Honeycomb& b) { return dump(io::to_json(facet_inequality(a, b))); });
  m.def("shrink", &shrink);
  m.def("one_honeycomb", [](const py::sequence& p) {
    if (py::len(p) != 3) throw Error(ErrorCode::DIMENSION_MISMATCH, "a point has three coordinates");
    return one_honeycomb(PointB(to_rat(p[0]), to_rat(p[1]), to_rat(p[2])));
  });
  m.def("translated", [](const Honeycomb& h, const py::sequence& p) {
    if (py::len(p) != 3) throw Error(ErrorCode::DIMENSION_MISMATCH, "a point has three coordinates");
    return translated(h, PointB(to_rat(p[0]), to_rat(p[1]), to_rat(p[2])));
  });

  // Matrices.
  m.def("matrix_with_spectrum", [](const py::sequence& l, std::uint64_t seed) {
    const auto h = matrix_with_spectrum(to_spectrum(l), seed);
    std::vector<std::vector<HermitianMatrix::Complex>> rows(static_cast<std::size_t>(h.n()));
    for (int i = 0; i < h.n(); ++i)
      for (int j = 0; j < h.n(); ++j) rows[static_cast<std::size_t>(i)].push_back(h(i, j));
    return rows;
  }, py::arg("lam"), py::arg("seed"));
  m.def("eigenvalues", [](const std::vector<std::vector<HermitianMatrix::Complex>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<HermitianMatrix::Complex> flat;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != n) throw Error(ErrorCode::DIMENSION_MISMATCH, "matrix must be square");
      flat.insert(flat.end(), r.begin(), r.end());
    }
    return eigenvalues(HermitianMatrix(n, std::move(flat)));
  });
  m.def("monte_carlo_check", [](const py::sequence& l, const py::sequence& u, std::size_t trials, std::uint64_t seed,
                                unsigned threads) {
    const auto lam = to_spectrum(l), mu = to_spectrum(u);
    py::gil_scoped_release release;
    return dump(io::to_json(monte_carlo_check(lam, mu, trials, seed, threads)));
  }, py::arg("lam"), py::arg("mu"), py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1);
  m.def("fiber_volume", [](const py::sequence& l, const py::sequence& u, const py::sequence& v) {
    return fraction(fiber_volume(to_spectrum(l), to_spectrum(u), to_spectrum(v)));
  }, py::arg("lam"), py::arg("mu"), py::arg("nu"));

  // Output.
  m.def("render_svg", [](const std::vector<Honeycomb>& hs, bool origin) {
    std::vector<Diagram> layers;
    for (const auto& h : hs) layers.push_back(to_diagram(h));
    RenderOptions opt;
    opt.origin = origin;
    return render_svg(layers, opt);
  }, py::arg("honeycombs"), py::arg("origin") = false);
  m.def("handle_api", [](const std::string& method, const std::string& path,
                         const std::map<std::string, std::string>& query, const std::string& body) {
    const auto r = handle_api(method, path, query, body);
    return py::make_tuple(r.status, r.content_type, r.body);
  }, py::arg("method"), py::arg("path"), py::arg("query") = std::map<std::string, std::string>{},
     py::arg("body") = "");
}
