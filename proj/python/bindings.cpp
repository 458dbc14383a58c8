// Copyright 2026 The cmisolate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cmisolate/cli.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/exactfield.hpp"
#include "cmisolate/heuristic.hpp"
#include "cmisolate/primality.hpp"
#include "cmisolate/search.hpp"
#include "cmisolate/splitting.hpp"
#include "cmisolate/weilnum.hpp"

namespace py = pybind11;
using namespace cmisolate;

namespace {

// Big integers cross the boundary as Python ints via their decimal text.
py::int_ to_py(const mpz_class& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

mpz_class from_py(const py::int_& x) { return mpz_class(py::str(x).cast<std::string>()); }

py::object fraction(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

py::dict candidate_dict(const WeilCandidate& w) {
  py::dict out;
  out["A"] = to_py(w.A);
  out["B"] = to_py(w.B);
  out["C"] = to_py(w.C);
  out["D"] = to_py(w.D);
  out["p"] = to_py(w.p);
  out["I"] = to_py(w.I);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cmisolate, m) {
  m.doc() = "Isolated genus-2 parameter search and density predictions";
  m.attr("__version__") = kVersion;

  static py::exception<FieldError> field_error(m, "FieldError", PyExc_ValueError);
  static py::exception<SearchExhausted> search_exhausted(m, "SearchExhausted", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FieldError& e) {
      PyErr_SetString(field_error.ptr(), e.what());
    } catch (const SearchExhausted& e) {
      PyErr_SetString(search_exhausted.ptr(), e.what());
    }
  });

  py::class_<CyclicCMField>(m, "CyclicCMField")
      .def_readonly("d", &CyclicCMField::d)
      .def_readonly("b", &CyclicCMField::b)
      .def_readonly("c", &CyclicCMField::c)
      .def_readonly("a", &CyclicCMField::a)
      .def_readonly("name", &CyclicCMField::name)
      .def_readonly("class_number", &CyclicCMField::class_number)
      .def_readonly("no_prime_index", &CyclicCMField::no_prime_index)
      .def_property_readonly("disc", [](const CyclicCMField& f) { return to_py(f.disc); })
      .def("__repr__", [](const CyclicCMField& f) {
        std::ostringstream s;
        s << "CyclicCMField(d=" << f.d << ", b=" << f.b << ", c=" << f.c << ")";
        return s.str();
      });

  m.def("make_cyclic_field", &make_cyclic_field, py::arg("d"), py::arg("b"), py::arg("c"),
        py::arg("class_number") = py::none());
  m.def("preset_field", &preset_field, py::arg("name"));

  m.def("is_probable_prime", [](const py::int_& n) { return is_probable_prime(from_py(n)); }, py::arg("n"));

  m.def(
      "candidate",
      [](const CyclicCMField& f, const py::int_& C, const py::int_& D) {
        const auto w = complete_candidate(f, from_py(C), from_py(D), 1);
        py::dict out = candidate_dict(w);
        out["disc"] = to_py(disc_closed_form(w));
        return out;
      },
      py::arg("field"), py::arg("C"), py::arg("D"));

  m.def(
      "classify_prime",
      [](const CyclicCMField& f, std::uint64_t l) { return splitting_class_name(classify_prime(f, l)); },
      py::arg("field"), py::arg("l"));
  m.def(
      "prob_neither", [](const CyclicCMField& f, std::uint64_t l) { return fraction(prob_neither(f, l)); },
      py::arg("field"), py::arg("l"));

  m.def(
      "count_prime_pairs",
      [](const CyclicCMField& f, std::int64_t bound, const std::string& grid, unsigned threads) {
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = count_prime_pairs(f, bound, parse_grid(grid), threads);
        }
        py::list hits;
        for (const auto& h : r.hits) hits.append(py::make_tuple(h.C, h.D, to_py(h.p), to_py(h.I)));
        py::dict out;
        out["count"] = r.count;
        out["hits"] = hits;
        out["convention"] = r.convention();
        return out;
      },
      py::arg("field"), py::arg("bound"), py::arg("grid") = "shifted", py::arg("threads") = 0);

  m.def(
      "empirical_frequency",
      [](const CyclicCMField& f, std::uint64_t l, std::int64_t lo, std::int64_t hi) {
        const auto r = empirical_frequency(f, l, lo, hi);
        return fraction(r.exact);
      },
      py::arg("field"), py::arg("l"), py::arg("lo") = 3, py::arg("hi") = 2001);

  m.def(
      "correction_constant",
      [](const CyclicCMField& f, std::uint64_t z) {
        const auto r = correction_constant(f, z);
        py::dict out;
        out["z"] = r.z;
        out["value"] = static_cast<double>(r.value);
        out["restricted"] = static_cast<double>(r.restricted);
        out["prefactor"] = static_cast<double>(r.prefactor);
        out["diverges_to_zero"] = r.diverges_to_zero;
        return out;
      },
      py::arg("field"), py::arg("z") = 1000000);

  m.def(
      "predict_count",
      [](const CyclicCMField& f, std::int64_t bound, const std::string& mode, std::uint64_t z_max) {
        PredictionConfig cfg;
        cfg.mode = parse_mode(mode);
        cfg.z_max = z_max;
        CountPrediction r;
        {
          py::gil_scoped_release release;
          r = predict_count(f, bound, cfg);
        }
        return py::make_tuple(r.rounded, static_cast<double>(r.value));
      },
      py::arg("field"), py::arg("bound"), py::arg("mode") = "constant", py::arg("z_max") = 1000000);

  m.def(
      "find_isolated",
      [](const CyclicCMField& f, unsigned bits, unsigned large_bits, std::uint64_t seed, std::uint64_t max_attempts) {
        FindConfig cfg;
        cfg.target_p_bits = bits;
        cfg.large_prime_bits = large_bits;
        cfg.seed = seed;
        cfg.max_attempts = max_attempts;
        FindResult r;
        {
          py::gil_scoped_release release;
          r = find_isolated(f, cfg);
        }
        py::dict out = candidate_dict(r.candidate);
        out["class"] = r.isolation.tag_name();
        out["attempts"] = r.attempts;
        return out;
      },
      py::arg("field"), py::arg("bits") = 80, py::arg("large_bits") = 80, py::arg("seed") = 1,
      py::arg("max_attempts") = 2000000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
