#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hg4/classifier.h"
#include "hg4/verify.h"

namespace py = pybind11;

namespace {

hg4::SolverPolicy make_policy(int restarts, double tol, int max_iter, uint64_t seed) {
    hg4::SolverPolicy p;
    p.restarts = restarts;
    p.tol = tol;
    p.max_iter = max_iter;
    p.seed = seed;
    p.validate();
    return p;
}

hg4::HypergraphCode as_code(const py::object &h) {
    if (py::isinstance<py::str>(h)) {
        return hg4::parse_edges(h.cast<std::string>());
    }
    return hg4::HypergraphCode(h.cast<unsigned>());
}

py::dict orbit_dict(const hg4::OrbitRecord &r) {
    py::dict d;
    d["orbit_id"] = r.orbit_id;
    d["rep"] = r.rep.bits;
    d["rep_edges"] = hg4::format_edges(r.rep);
    d["size"] = r.size;
    d["rank"] = r.rank;
    d["m"] = r.m ? py::object(py::int_(*r.m)) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Four-qubit hypergraph states: construction, orbits, entanglement measures";

    m.def("parse_edges", [](const std::string &text) { return hg4::parse_edges(text).bits; }, py::arg("text"),
          "Parse \"1234,123\" into a 15-bit hypergraph code.");
    m.def("format_edges", [](const py::object &h) { return hg4::format_edges(as_code(h)); }, py::arg("h"));
    m.def("standardize", [](const py::object &h) { return hg4::standardize(as_code(h)).bits; }, py::arg("h"));
    m.def("apply_x", [](const py::object &h, int v) { return hg4::apply_x(as_code(h), v).bits; }, py::arg("h"),
          py::arg("vertex"));
    m.def("apply_z", [](const py::object &h, int v) { return hg4::apply_z(as_code(h), v).bits; }, py::arg("h"),
          py::arg("vertex"));
    m.def("rank", [](const py::object &h) { return hg4::rank(as_code(h)); }, py::arg("h"));
    m.def("signs", [](const py::object &h) {
        const hg4::SignFunction g = hg4::signs_from_hypergraph(as_code(h));
        std::vector<int> out;
        for (unsigned mu = 0; mu < hg4::kNumBasisStates; mu++) {
            out.push_back(g[mu]);
        }
        return out;
    }, py::arg("h"), "g(mu) for mu = 0..15, vertex 1 being bit 0.");
    m.def("state", [](const py::object &h) {
        const hg4::StateVector s = hg4::build_state(as_code(h));
        return std::vector<double>(s.amps.begin(), s.amps.end());
    }, py::arg("h"));
    m.def("verify_stabilizers", [](const py::object &h) { return hg4::verify_stabilizers(as_code(h)); },
          py::arg("h"));
    m.def("entropy_profile", [](const py::object &h) {
        const hg4::EntropyProfile p = hg4::entropy_profile(as_code(h));
        py::dict d;
        d["be1"] = std::vector<double>(p.be1.begin(), p.be1.end());
        d["be2"] = std::vector<double>(p.be2.begin(), p.be2.end());
        return d;
    }, py::arg("h"));
    m.def("geometric_entanglement", [](const py::object &h, int restarts, double tol, int max_iter, uint64_t seed) {
        const hg4::GeSolution sol = hg4::geometric_entanglement(as_code(h), make_policy(restarts, tol, max_iter, seed));
        py::dict d;
        d["eg"] = sol.eg;
        d["overlap"] = sol.overlap;
        d["pattern"] = sol.pattern.label;
        d["reality"] = std::string(1, sol.pattern.reality());
        d["restarts_hit"] = sol.restarts_hit;
        d["runs"] = sol.runs;
        d["converged"] = sol.converged;
        return d;
    }, py::arg("h"), py::arg("restarts") = 64, py::arg("tol") = 1e-12, py::arg("max_iter") = 5000,
       py::arg("seed") = 0);

    py::class_<hg4::OrbitTable>(m, "OrbitTable")
        .def_property_readonly("num_orbits", &hg4::OrbitTable::num_orbits)
        .def_property_readonly("reps", [](const hg4::OrbitTable &t) {
            std::vector<unsigned> out;
            for (hg4::HypergraphCode r : t.reps) {
                out.push_back(r.bits);
            }
            return out;
        })
        .def("orbit_of", [](const hg4::OrbitTable &t, const py::object &h) { return orbit_dict(hg4::orbit_of(t, as_code(h))); },
             py::arg("h"))
        .def("census", [](const hg4::OrbitTable &t) {
            const hg4::RankCensus c = hg4::rank_census(t);
            py::dict d;
            d["rank4"] = c.rank4;
            d["rank3"] = c.rank3;
            d["graphs"] = c.graphs;
            return d;
        });
    m.def("enumerate_orbits", &hg4::enumerate_orbits);

    m.def("classify", [](int restarts, double tol, int max_iter, uint64_t seed, const std::string &format) {
        const hg4::ReportFormat f = hg4::parse_report_format(format);
        const hg4::Classification c = hg4::classify_all(hg4::enumerate_orbits(), make_policy(restarts, tol, max_iter, seed));
        return hg4::emit_report(c, f);
    }, py::arg("restarts") = 64, py::arg("tol") = 1e-12, py::arg("max_iter") = 5000, py::arg("seed") = 0,
       py::arg("format") = "json", "Classify all codes and return the report text.");

    m.def("run_suite", [](const std::string &name) {
        const hg4::OrbitTable t = hg4::enumerate_orbits();
        const hg4::SuiteResult r = hg4::run_suite(name, t);
        return py::make_tuple(r.passed, r.detail);
    }, py::arg("name"));
    m.attr("suite_names") = hg4::suite_names();
}
