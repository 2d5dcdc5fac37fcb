/*
   Copyright 2026 the conseq authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "conseq/bounds.hpp"
#include "conseq/factor.hpp"
#include "conseq/seq.hpp"
#include "conseq/text.hpp"

namespace py = pybind11;
using namespace conseq;

// Fields are kept alive behind shared_ptr so Poly/CoeffSeq handles returned
// to Python never outlive their field.
namespace {

struct PyField {
    std::shared_ptr<Field> f;
    explicit PyField(const std::string& spec)
        : f(std::make_shared<Field>(parse_field_spec(spec))) {}
};

Poly to_poly(const PyField& F, const std::string& s) { return parse_poly(*F.f, s); }
CoeffSeq to_seq(const PyField& F, const std::string& s) { return parse_seq(*F.f, s); }

}  // namespace

PYBIND11_MODULE(_conseq, m) {
    m.doc() = "consecutive irreducible polynomial sequences over F_q";

    py::class_<PyField>(m, "Field")
        .def(py::init<const std::string&>(), py::arg("spec"))
        .def_property_readonly("q", [](const PyField& F) { return F.f->q(); })
        .def_property_readonly("p", [](const PyField& F) { return F.f->p(); })
        .def_property_readonly("s", [](const PyField& F) { return F.f->s(); })
        .def("__repr__",
             [](const PyField& F) { return "Field(" + format_field_spec(*F.f) + ")"; });

    m.def("factor", [](const PyField& F, const std::string& poly, uint64_t seed) {
        Factorization fac = factor(to_poly(F, poly), seed);
        std::vector<std::pair<std::string, int>> out;
        for (const auto& [g, mult] : fac.factors)
            out.emplace_back(format_poly(g), mult);
        return py::make_tuple(format_elem(*F.f, fac.unit), out);
    }, py::arg("field"), py::arg("poly"), py::arg("seed") = 0);

    m.def("is_irreducible", [](const PyField& F, const std::string& poly) {
        return is_irreducible(to_poly(F, poly));
    });

    m.def("discriminant", [](const PyField& F, const std::string& poly) {
        return format_elem(*F.f, discriminant(to_poly(F, poly)));
    });

    m.def("resultant", [](const PyField& F, const std::string& f, const std::string& g) {
        return format_elem(*F.f, resultant(to_poly(F, f), to_poly(F, g)));
    });

    m.def("quartic_roots", [](const PyField& F, const std::string& a,
                              const std::string& b, const std::string& c) {
        QuarticRoots r = quartic_roots_via_resolvent(
            *F.f, parse_elem(*F.f, a), parse_elem(*F.f, b), parse_elem(*F.f, c));
        std::vector<std::string> roots;
        for (Elem e : r.roots) roots.push_back(format_elem(*F.f, e));
        return py::make_tuple(roots, r.fallback);
    });

    m.def("is_consecutive_irreducible", [](const PyField& F, const std::string& seq) {
        ConsecCheck chk = is_consecutive_irreducible(to_seq(F, seq));
        return py::make_tuple(chk.ok, chk.first_failure);
    });

    m.def("count_sequences",
          [](const PyField& F, uint32_t N, bool symmetry, uint64_t budget,
             uint32_t threads) {
              EnumerationResult r = count_sequences(*F.f, N, symmetry, budget, threads);
              return py::make_tuple(r.count, r.exact);
          },
          py::arg("field"), py::arg("N"), py::arg("symmetry") = true,
          py::arg("budget") = uint64_t(1) << 30, py::arg("threads") = 1);

    m.def("max_length",
          [](const PyField& F, uint64_t budget) {
              LengthResult r = max_length_search(*F.f, budget);
              return py::make_tuple(r.max_length_found, r.exhausted,
                                    r.witness ? format_seq(*r.witness) : std::string());
          },
          py::arg("field"), py::arg("budget") = uint64_t(1) << 30);

    m.def("all_ones_largest_degree", [](const PyField& F, uint64_t n) {
        return all_ones_largest_degree(*F.f, n);
    });

    m.def("coprime_search", [](const PyField& F, int H) -> py::object {
        auto seq = coprime_sequence_search(*F.f, H);
        if (!seq) return py::none();
        return py::str(format_seq(*seq));
    });

    m.def("bounds_report_csv", [](const PyField& F, uint32_t N_max) {
        ReportOptions opt;
        opt.N_max = N_max;
        return report_csv(build_report(*F.f, opt));
    });
}
