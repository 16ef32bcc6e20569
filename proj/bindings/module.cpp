#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qfc/certify.hpp"
#include "qfc/cli.hpp"

namespace py = pybind11;

namespace {

double simulate_do_nothing(double p, double theta) {
    return qfc::average_fidelity(qfc::KrausChannel::identity(), qfc::TaskParams(p, theta));
}

double simulate_dr(int variant, double p, double theta) {
    return qfc::average_fidelity(qfc::dr_channel(variant, theta), qfc::TaskParams(p, theta));
}

double simulate_feedback(double p, double theta, double chi) {
    const qfc::TaskParams task(p, theta);
    return qfc::average_fidelity(qfc::quantum_control_channel(task, chi), task);
}

py::dict quantum_bound(double p, double theta) {
    const qfc::QuantumDualCertificate cert = qfc::quantum_dual(qfc::TaskParams(p, theta));
    py::dict d;
    d["bound"] = cert.bound;
    d["slack"] = cert.min_eig_slack;
    d["degenerate"] = cert.degenerate;
    return d;
}

py::dict classical_bound(double p, double theta) {
    const qfc::ClassicalDualCertificate cert = qfc::classical_dual(qfc::TaskParams(p, theta));
    py::dict d;
    d["bound"] = cert.bound;
    d["slack"] = cert.min_eig_slack;
    return d;
}

py::tuple best_random_channel(double p, double theta, std::int64_t n_samples, std::uint64_t seed) {
    const qfc::OracleResult res = qfc::random_cptp_oracle(qfc::TaskParams(p, theta), n_samples, seed);
    return py::make_tuple(res.max_fidelity, res.best_index);
}

double circuit_discrepancy(double chi) {
    const qfc::MeasurementPair direct = qfc::weak_measurement(chi);
    const qfc::MeasurementPair induced = qfc::circuit_induced_measurement(chi);
    return std::max(direct.m0.distance(induced.m0), direct.m1.distance(induced.m1));
}

py::dict find_max_fdif(int density) {
    const qfc::cli::FindMaxResult res = qfc::cli::find_max_fdif(density);
    py::dict d;
    d["p"] = res.p;
    d["theta"] = res.theta;
    d["f_dif"] = res.f;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Discrete-time measurement and feedback control of a dephasing qubit";

    m.def("do_nothing_fidelity",
          [](double p, double theta) { return qfc::do_nothing_fidelity(qfc::TaskParams(p, theta)); },
          py::arg("p"), py::arg("theta"),
          "Average fidelity of leaving the noisy state untouched");
    m.def("helstrom_probability", &qfc::helstrom_probability, py::arg("theta"),
          "Best two-state discrimination success probability, noise independent");
    m.def("dr_fidelity", &qfc::dr_fidelity, py::arg("variant"), py::arg("theta"),
          "Closed-form fidelity of the discriminate-and-reprepare schemes");
    m.def("fqc",
          [](double p, double theta, double chi) { return qfc::fqc(qfc::TaskParams(p, theta), chi); },
          py::arg("p"), py::arg("theta"), py::arg("chi"),
          "Closed-form fidelity of weak measurement plus feedback at strength chi");
    m.def("chi_opt", [](double p, double theta) { return qfc::chi_opt(qfc::TaskParams(p, theta)); },
          py::arg("p"), py::arg("theta"), "Optimal measurement strength");
    m.def("eta_opt",
          [](double p, double theta, double chi) { return qfc::eta_opt(qfc::TaskParams(p, theta), chi); },
          py::arg("p"), py::arg("theta"), py::arg("chi"),
          "Feedback angle returning both post-measurement states to the xz plane");
    m.def("fqc_opt", [](double p, double theta) { return qfc::fqc_opt(qfc::TaskParams(p, theta)); },
          py::arg("p"), py::arg("theta"), "Fidelity of the feedback scheme at the optimal strength");
    m.def("f_dif", [](double p, double theta) { return qfc::f_dif(qfc::TaskParams(p, theta)); },
          py::arg("p"), py::arg("theta"),
          "Advantage of the feedback scheme over the best reference scheme");

    m.def("simulate_do_nothing", &simulate_do_nothing, py::arg("p"), py::arg("theta"),
          "Density-matrix simulation of the identity control");
    m.def("simulate_dr", &simulate_dr, py::arg("variant"), py::arg("p"), py::arg("theta"),
          "Density-matrix simulation of a discriminate-and-reprepare control");
    m.def("simulate_feedback", &simulate_feedback, py::arg("p"), py::arg("theta"), py::arg("chi"),
          "Density-matrix simulation of the measurement-and-feedback control");

    m.def("quantum_bound", &quantum_bound, py::arg("p"), py::arg("theta"),
          "Dual upper bound on any control channel, with its feasibility slack");
    m.def("classical_bound", &classical_bound, py::arg("p"), py::arg("theta"),
          "Dual upper bound on measure-and-reprepare controls, with its slack");
    m.def("best_random_channel", &best_random_channel, py::arg("p"), py::arg("theta"),
          py::arg("n_samples"), py::arg("seed"),
          "Best average fidelity over seeded random CPTP channels: (fidelity, index)");
    m.def("circuit_discrepancy", &circuit_discrepancy, py::arg("chi"),
          "Operator distance between the meter circuit and the direct measurement");
    m.def("find_max_fdif", &find_max_fdif, py::arg("density") = 500,
          "Grid-plus-refinement search for the largest feedback advantage");
}
