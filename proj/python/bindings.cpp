#include "flowvol/diffop.hpp"
#include "flowvol/induction.hpp"
#include "flowvol/oracle.hpp"
#include "flowvol/problem.hpp"
#include "flowvol/render.hpp"
#include "flowvol/residue.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace flowvol;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
py::dict terms_of(const MultiPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) {
    py::tuple key(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
    out[key] = to_string(c);
  }
  return out;
}

MultiplicityMatrix matrix(int rank, const std::vector<int>& entries) { return {rank, entries}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact volume polynomials of type-A flow polytopes";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResidueError>(m, "ResidueError");
  py::register_exception<InductionError>(m, "InductionError");
  py::register_exception<OracleError>(m, "OracleError");

  m.def("volume_terms", [](int r, const std::vector<int>& e) { return terms_of(iterated_residue(matrix(r, e)).poly); },
        py::arg("rank"), py::arg("entries"));
  m.def("volume_string", [](int r, const std::vector<int>& e, bool latex) {
        const auto v = iterated_residue(matrix(r, e)).poly;
        return latex ? to_latex(v) : to_string(v);
      },
      py::arg("rank"), py::arg("entries"), py::arg("latex") = false);
  m.def("kernel_string", [](int r, const std::vector<int>& e) { return to_string(build_kernel(matrix(r, e))); },
        py::arg("rank"), py::arg("entries"));
  m.def("pde_operators", [](int r, const std::vector<int>& e) {
        std::vector<std::string> out;
        for (const auto& op : pde_system(matrix(r, e)).ops) out.push_back(to_string(op));
        return out;
      },
      py::arg("rank"), py::arg("entries"));
  m.def("annihilates", [](int r, const std::vector<int>& e) {
        const auto mm = matrix(r, e);
        return annihilates(mm, iterated_residue(mm));
      },
      py::arg("rank"), py::arg("entries"));
  m.def("solution_space", [](int r, const std::vector<int>& e, unsigned degree) {
        py::list out;
        for (const auto& p : solution_space(matrix(r, e), degree)) out.append(terms_of(p));
        return out;
      },
      py::arg("rank"), py::arg("entries"), py::arg("degree"));
  m.def("lift_terms", [](int r, const std::vector<int>& e) {
        const auto mm = matrix(r, e);
        return terms_of(lift_volume(iterated_residue(mm.sub_matrix()), mm).poly);
      },
      py::arg("rank"), py::arg("entries"));
  m.def("count_lattice_points", [](int r, const std::vector<int>& e, const AVector& a) {
        return to_string(count_lattice_points(matrix(r, e), a));
      },
      py::arg("rank"), py::arg("entries"), py::arg("a"));
  m.def("ehrhart_leading_coefficient", [](int r, const std::vector<int>& e, const AVector& a, int max_dilation) {
        return to_string(ehrhart_leading_coefficient(matrix(r, e), a, max_dilation));
      },
      py::arg("rank"), py::arg("entries"), py::arg("a"), py::arg("max_dilation") = -1);
  m.def("run", [](const std::string& command, const std::string& spec, bool latex, bool order_check) {
        const auto res = run_command(parse_spec(spec), parse_command(command), {latex, order_check});
        return py::make_tuple(res.status, res.report);
      },
      py::arg("command"), py::arg("spec"), py::arg("latex") = false, py::arg("order_check") = false);
}
