#include "swdual/cohomology.hpp"
#include "swdual/duality.hpp"
#include "swdual/error.hpp"
#include "swdual/lattice.hpp"
#include "swdual/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace swdual;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
std::string report_json(const Report& r) { return r.to_json().dump(); }

RunOptions options(int precision, int max_degree, bool timing) {
    RunOptions o;
    o.precision = precision;
    o.max_degree = max_degree;
    o.timing = timing;
    return o;
}

IntMatrix to_matrix(const std::vector<std::vector<int64_t>>& rows) {
    if (rows.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
    IntMatrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) fail(ErrorKind::DimensionMismatch, "ragged basis");
        for (std::size_t j = 0; j < rows[i].size(); ++j) M(i, j) = rows[i][j];
    }
    return M;
}

std::vector<std::vector<std::string>> from_matrix(const IntMatrix& M) {
    std::vector<std::vector<std::string>> out(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out[i].push_back(M(i, j).str());
    return out;
}

py::dict shift_dict(const ShiftResult& s) {
    py::dict d;
    d["name"] = s.name;
    d["shift"] = s.shift;
    d["signed_form"] = s.signed_form;
    d["period"] = s.period;
    d["paper_inputs"] = s.paper_inputs();
    py::list trail;
    for (const auto& t : s.trail) trail.append(py::make_tuple(t.step, t.value, provenance_name(t.provenance)));
    d["trail"] = trail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_swdual, m) {
    m.doc() = "Exact arithmetic behind Spanier-Whitehead duality shifts of homotopy fixed points";

    // Messages start with the error kind, e.g. "UnknownTag: ...".
    py::register_exception<Error>(m, "SwdualError", PyExc_ValueError);

    m.def("shift_json", [](const std::string& c, int p, int n, int precision, bool timing) {
        return report_json(shift_report(c, p, n, options(precision, 4, timing)));
    }, py::arg("case"), py::arg("p") = 0, py::arg("n") = 0, py::arg("precision") = 6, py::arg("timing") = false);

    m.def("verify_json", [](const std::string& suite, int precision, int max_degree, bool timing) {
        return report_json(verify_report(suite, options(precision, max_degree, timing)));
    }, py::arg("suite") = "all", py::arg("precision") = 6, py::arg("max_degree") = 4, py::arg("timing") = false);

    m.def("dump_json", [](const std::string& what, const std::string& group, const std::string& c, int p,
                          const std::string& rep, int maxdeg) {
        return report_json(dump_report(what, group, c, p, rep, maxdeg));
    }, py::arg("what"), py::arg("group") = "", py::arg("case") = "", py::arg("p") = 0, py::arg("rep") = "",
       py::arg("maxdeg") = 4);

    m.def("sw_shift", [](const std::string& c, int p, int precision) {
        return shift_dict(sw_shift(case_from_tag(c, p, precision)));
    }, py::arg("case"), py::arg("p") = 0, py::arg("precision") = 6);
    m.def("central_case_shift", [](int n) { return shift_dict(central_case_shift(n)); }, py::arg("n"));
    m.def("exotic_picard_shift", [](int p) { return shift_dict(exotic_picard_shift(p)); }, py::arg("p"));
    m.def("period_of", &period_of, py::arg("case"), py::arg("subgroup"), py::arg("p") = 0);

    m.def("psi", [](const std::string& c, int p, const std::string& rep) {
        CaseData cd = case_from_tag(c, p);
        PsiValue v = psi(cd, cd.named_class(rep == "regular" ? "rho" : rep));
        return py::make_tuple(v.dim, v.w1 ? py::object(py::int_(*v.w1)) : py::object(py::none()), v.torsion, v.modulus);
    }, py::arg("case"), py::arg("p") = 0, py::arg("rep") = "rho");

    m.def("cohomology_dims", [](const std::string& group, int p, int maxdeg) {
        return bar_cohomology(group_from_tag(group, p), p, maxdeg);
    }, py::arg("group"), py::arg("p"), py::arg("maxdeg") = 4);

    m.def("saturate", [](const std::vector<std::vector<int64_t>>& basis, int64_t p) {
        return from_matrix(canonical_basis(saturate_at_p(Lattice{to_matrix(basis)}, p)));
    }, py::arg("basis"), py::arg("p"));

    m.def("suite_names", &suite_names);
}
