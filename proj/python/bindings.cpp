#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swc/commutant.hpp"
#include "swc/definetti.hpp"
#include "swc/moments.hpp"
#include "swc/phase_space.hpp"
#include "swc/protocols.hpp"
#include "swc/report.hpp"
#include "swc/stabilizer.hpp"
#include "swc/verify.hpp"

namespace py = pybind11;
using namespace swc;

namespace {

py::int_ big(const BigInt& v) { return py::int_(py::str(v.str())); }

py::dict report_dict(const DeFinettiReport& r) {
    py::dict d;
    d["variant"] = r.variant;
    d["n"] = r.n;
    d["d"] = r.d;
    d["t"] = r.t;
    d["s"] = r.s;
    d["distance"] = r.distance;
    d["cross_term"] = r.cross_term;
    d["bound"] = r.bound;
    d["vacuous"] = r.vacuous();
    d["within_bound"] = r.within_bound();
    d["p"] = r.p;
    return d;
}

}  // namespace

PYBIND11_MODULE(_swc, m) {
    m.doc() = "Stabilizer commutant toolkit";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("set_dimension_cap", &set_dimension_cap);
    m.def("dimension_cap", &dimension_cap);

    m.def("weyl", &weyl, py::arg("n"), py::arg("d"), py::arg("x"));
    m.def("wigner", py::overload_cast<const CVec&, int, int>(&wigner), py::arg("psi"), py::arg("n"), py::arg("d"));

    m.def("stabilizer_count", [](int n, int d) { return big(stabilizer_count(n, d)); });
    m.def("stabilizer_states", [](int n, int d) { return enumerate_stabilizer_states(n, d).matrix(); },
          "Columns are the enumerated stabilizer states.");
    m.def("max_stabilizer_overlap", [](const CVec& psi, int n, int d) {
        auto r = max_stabilizer_overlap(psi, n, d);
        return py::make_tuple(r.index, r.value);
    });

    m.def("sigma_count", [](int t, int d) { return big(sigma_count(t, d)); });
    m.def("enumerate_sigma", [](int t, int d) {
        std::vector<IMat> out;
        for (const auto& T : enumerate_sigma(t, d)) out.push_back(T.basis);
        return out;
    }, "Canonical RREF bases of Sigma_{t,t}(d).");
    m.def("o_order", [](int t, int d) { return enumerate_O(t, d).size(); });
    m.def("R_of_T", [](const IMat& basis, int d, int n) {
        return R_of_T(rref(basis, d, static_cast<int>(basis.at(0).size())), n);
    });

    m.def("moment_formula", [](int n, int d, int t) { return moment_formula(n, d, t).op; });
    m.def("moment_bruteforce", [](int n, int d, int t) { return moment_bruteforce(n, d, t).op; });
    m.def("design_gap", &design_gap, py::arg("n"), py::arg("d"), py::arg("t"), py::arg("dense_limit") = 1024);

    m.def("qubit_accept_probability", &qubit_accept_probability, py::arg("psi"), py::arg("n"));
    m.def("qudit_accept_probability", &qudit_accept_probability, py::arg("psi"), py::arg("n"), py::arg("d"),
          py::arg("s"));
    m.def("three_copy_accept_probability", &three_copy_accept_probability, py::arg("psi"), py::arg("n"),
          py::arg("d"));
    m.def("sum_negativity", &sum_negativity);

    m.def("gram_eps", &gram_eps);
    m.def("gram_claims", [](int n, int d, int t) {
        GramData g = gram(n, d, t);
        py::dict r;
        r["eps"] = g.eps;
        r["opnorm_dev"] = g.opnorm_dev;
        r["rank"] = g.rank;
        r["size"] = g.size();
        r["claims_hold"] = g.lemma_applies() && g.claims_hold();
        return r;
    });
    m.def("exp_definetti", [](int n, int d, int t, int s, unsigned long long seed) {
        Rng rng(seed);
        return report_dict(exp_definetti_coefficients(random_invariant_coefficients(n, d, t, rng), n, d, t, s));
    }, py::arg("n"), py::arg("d"), py::arg("t"), py::arg("s"), py::arg("seed"));

    m.def("verify_all_json", [](const std::string& profile, unsigned long long seed, const std::vector<int>& only) {
        ReportBundle b = verify_all(profile_from_name(profile), seed, only);
        return emit(b, Format::json);
    }, py::arg("profile") = "quick", py::arg("seed") = 0, py::arg("only") = std::vector<int>{});
}
