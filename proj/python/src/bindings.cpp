#include "homwb/dsl/report.hpp"
#include "homwb/dsl/spec.hpp"
#include "homwb/dsl/workbench.hpp"
#include "homwb/error.hpp"
#include "homwb/model.hpp"
#include "homwb/random.hpp"
#include "homwb/smith.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace homwb;

namespace {

py::object to_py(const Integer& x) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

IntMatrix to_matrix(const std::vector<std::vector<py::object>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Integer(py::str(rows[i][j]).cast<std::string>());
    }
    return m;
}

py::dict invariants(const IsoInvariants& inv) {
    py::dict d;
    d["rank"] = inv.rank;
    py::list t;
    for (const auto& x : inv.torsion) t.append(to_py(x));
    d["torsion"] = t;
    return d;
}

dsl::CommandStmt::Kind command_kind(const std::string& name) {
    if (name == "validate") return dsl::CommandStmt::Kind::Validate;
    if (name == "cellular") return dsl::CommandStmt::Kind::Cellular;
    if (name == "spectral") return dsl::CommandStmt::Kind::Spectral;
    if (name == "end-algebra") return dsl::CommandStmt::Kind::EndAlgebra;
    throw InputError("unknown command '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_homwb, m) {
    m.doc() = "homology workbench core";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ArithmeticError);

    m.def(
        "smith",
        [](const std::vector<std::vector<py::object>>& rows) {
            const SmithDecomposition s = smith(to_matrix(rows));
            py::dict d;
            d["u"] = to_py(s.u);
            d["d"] = to_py(s.d);
            d["v"] = to_py(s.v);
            d["rank"] = s.rank;
            py::list diag;
            for (const auto& x : s.diagonal()) diag.append(to_py(x));
            d["diagonal"] = diag;
            return d;
        },
        py::arg("matrix"), "U, D, V with U*A*V = D in Smith normal form.");

    m.def(
        "homology",
        [](const std::vector<Simplex>& simplices, const std::vector<Simplex>& sub, int n, long modulus) {
            const SimplicialComplex x = simplices.empty() ? SimplicialComplex() : SimplicialComplex::from_simplices(simplices);
            const SimplicialComplex y = sub.empty() ? SimplicialComplex() : SimplicialComplex::from_simplices(sub);
            const Coefficients c = modulus ? Coefficients::modulo(modulus) : Coefficients::integers();
            return invariants(relative_homology(SimpPair::make(x, y), c, n).invariants());
        },
        py::arg("simplices"), py::arg("sub") = std::vector<Simplex>{}, py::arg("n") = 0, py::arg("modulus") = 0,
        "Invariants of H_n(X, Y) with Z or Z/m coefficients.");

    m.def(
        "run",
        [](const std::string& text, std::optional<std::string> coeff, std::optional<std::string> window,
           std::optional<std::string> flavor) {
            dsl::RunOptions opts;
            if (coeff) opts.modulus = dsl::parse_coefficient(*coeff);
            if (window) opts.window = dsl::parse_window(*window);
            if (flavor) opts.flavors = logic::Flavors::parse(*flavor);
            const dsl::Report r = dsl::run(dsl::parse(text), text, opts);
            return py::make_tuple(r.exit_code, r.to_json());
        },
        py::arg("text"), py::arg("coeff") = py::none(), py::arg("window") = py::none(), py::arg("flavor") = py::none(),
        "Run a workbench spec; returns (exit_code, report_json).");

    m.def("canonical", [](const std::string& text) { return dsl::print(dsl::parse(text)); }, py::arg("text"),
          "Canonical printed form of a workbench spec.");

    m.def("digest", &dsl::digest, py::arg("text"));

    m.def(
        "random_spec",
        [](std::uint64_t seed, const std::string& command) {
            random::Rng rng(seed);
            return dsl::print(random::spec(rng, command_kind(command)));
        },
        py::arg("seed") = 0, py::arg("command") = "validate");
}
