#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "equibir/report.hpp"

namespace py = pybind11;
using namespace equibir;

namespace {

py::object to_py(const report::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

const Dp4Data& dp4() {
    static Dp4Data d = dp4_pipeline();
    return d;
}

const EulerLattice& euler() {
    static EulerLattice l(dp4());
    return l;
}

IntMat from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) throw Error("empty matrix");
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw Error("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<std::string>> to_rows(const IntMat& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact toolkit for equivariant surface computations";
    m.attr("__version__") = EQUIBIR_VERSION;

    m.def(
        "lines", [](bool count_only) { return to_py(report::lines_report(dp4(), count_only)); },
        py::arg("count_only") = false,
        "enumerate the 16 lines and the induced lattice data");
    m.def("euler_gram", [] { return to_py(report::euler_report(dp4(), euler())); });
    m.def("h1_check", [] { return to_py(report::h1_report(euler())); });
    m.def(
        "dp4_obstruction",
        [](unsigned modulus) { return to_py(report::obstruction_json(theorem_pipeline(euler(), modulus))); },
        py::arg("modulus") = 3);
    m.def(
        "wedge2_decompose",
        [](const std::string& table_file, const std::string& label) {
            LoadedTable t = load_char_table(table_file);
            return to_py(report::wedge_report(t, label));
        },
        py::arg("table_file"), py::arg("label"));
    m.def(
        "sl2_basis", [](unsigned n) { return to_py(report::sl2_report(n)); }, py::arg("n") = 4);
    m.def(
        "linsec_check",
        [](const std::string& scenario_file, const std::string& fixtures) {
            ScenarioFile f = load_scenario(scenario_file);
            LoadedTable t = load_char_table(fixture_dir(fixtures) / (f.table + ".chartab"));
            auto s = scenario_from_decomposition(t.table.row(f.w_label), t.table, f.chosen);
            s.name = f.name;
            return to_py(report::linsec_report(f, s, check_scenario(s), t.digest));
        },
        py::arg("scenario_file"), py::arg("fixtures") = "");
    m.def(
        "verify_fixtures",
        [](const std::string& fixtures) {
            return to_py(report::fixtures_report(fixture_dir(fixtures)));
        },
        py::arg("fixtures") = "");

    // direct kernels
    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long>>& rows) {
            SmithForm s = smith_normal_form(from_rows(rows));
            return py::make_tuple(to_rows(s.u), to_rows(s.d), to_rows(s.v));
        },
        "U, D, V with U*M*V = D, U and V unimodular");
    m.def("cyc_add", [](const std::string& a, const std::string& b) {
        return (CycNum::parse(a) + CycNum::parse(b)).str();
    });
    m.def("cyc_mul", [](const std::string& a, const std::string& b) {
        return (CycNum::parse(a) * CycNum::parse(b)).str();
    });
    m.def("cyc_inv", [](const std::string& a) { return CycNum::parse(a).inverse().str(); });
    m.def(
        "cyc_conj",
        [](const std::string& a, long k) { return CycNum::parse(a).galois(k).str(); },
        py::arg("a"), py::arg("k") = -1);
    m.def("group_order", [](const std::vector<std::string>& cycles) {
        std::size_t deg = 0;
        for (const auto& c : cycles) deg = std::max(deg, Perm::parse_cycles(c).degree());
        std::vector<GroupElement> gens;
        for (const auto& c : cycles) gens.emplace_back(Perm::parse_cycles(c, deg));
        FinGroup g = FinGroup::close(gens);
        return py::make_tuple(g.order(), g.num_classes());
    });

    py::register_exception<Error>(m, "EquibirError");
}
