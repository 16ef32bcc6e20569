#include "qfc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qfc::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

double grid_value(double lo, double hi, int steps, int i) {
    if (steps == 1) return lo;
    // Endpoints must be exact: one rounding step past hi would leave the
    // validated parameter domain.
    if (i == steps - 1) return hi;
    return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(steps - 1));
}

void validate_axis(const char* name, double lo, double hi, int steps, double dom_lo, double dom_hi) {
    if (steps < 1) throw std::invalid_argument(std::string(name) + " steps must be at least 1");
    if (steps == 1 && lo != hi) {
        throw std::invalid_argument(std::string(name) + " range must collapse to a point when steps is 1");
    }
    if (!(lo <= hi)) throw std::invalid_argument(std::string(name) + " range is inverted");
    if (!(lo >= dom_lo && hi <= dom_hi)) {
        throw std::invalid_argument(std::string(name) + " range leaves the valid domain");
    }
}

template <typename F>
double golden_max(F f, double a, double b) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < 20; ++i) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

struct ColumnSet {
    bool f_n = false;
    bool f_dr1 = false;
    bool f_dr2 = false;
    bool f_qc = false;  // only meaningful when the chi axis is present
    bool f_qc_opt = false;
    bool chi_opt = false;
    bool f_dif = false;
};

ColumnSet columns_for(SchemeSelector scheme, bool has_chi) {
    ColumnSet cols;
    switch (scheme) {
        case SchemeSelector::nothing:
            cols.f_n = true;
            break;
        case SchemeSelector::dr1:
            cols.f_dr1 = true;
            break;
        case SchemeSelector::dr2:
            cols.f_dr2 = true;
            break;
        case SchemeSelector::qc:
            cols.f_qc = has_chi;
            cols.f_qc_opt = true;
            cols.chi_opt = true;
            break;
        case SchemeSelector::all:
            cols.f_n = true;
            cols.f_dr1 = true;
            cols.f_dr2 = true;
            cols.f_qc = has_chi;
            cols.f_qc_opt = true;
            cols.chi_opt = true;
            cols.f_dif = true;
            break;
    }
    return cols;
}

std::string sweep_row(const SweepConfig& config, const ColumnSet& cols, int row_index) {
    const bool has_chi = config.chi_steps > 0;
    const int chi_count = has_chi ? config.chi_steps : 1;
    const int ci = row_index % chi_count;
    const int ti = (row_index / chi_count) % config.theta_steps;
    const int pi = row_index / (chi_count * config.theta_steps);

    const double p = grid_value(config.p_min, config.p_max, config.p_steps, pi);
    const double theta = grid_value(config.theta_min, config.theta_max, config.theta_steps, ti);
    const TaskParams task(p, theta);

    std::string line = format_real(p);
    line += ',';
    line += format_real(theta);
    if (has_chi) {
        line += ',';
        line += format_real(grid_value(config.chi_min, config.chi_max, config.chi_steps, ci));
    }
    if (cols.f_n) {
        line += ',';
        line += format_real(do_nothing_fidelity(task));
    }
    if (cols.f_dr1) {
        line += ',';
        line += format_real(dr_fidelity(1, theta));
    }
    if (cols.f_dr2) {
        line += ',';
        line += format_real(dr_fidelity(2, theta));
    }
    if (cols.f_qc) {
        const double chi = grid_value(config.chi_min, config.chi_max, config.chi_steps, ci);
        line += ',';
        line += format_real(fqc(task, chi));
    }
    if (cols.f_qc_opt) {
        line += ',';
        line += format_real(fqc_opt(task));
    }
    if (cols.chi_opt) {
        line += ',';
        line += format_real(chi_opt(task));
    }
    if (cols.f_dif) {
        line += ',';
        line += format_real(f_dif(task));
    }
    return line;
}

}  // namespace

std::optional<SchemeSelector> parse_scheme(const std::string& name) {
    if (name == "nothing") return SchemeSelector::nothing;
    if (name == "dr1") return SchemeSelector::dr1;
    if (name == "dr2") return SchemeSelector::dr2;
    if (name == "qc") return SchemeSelector::qc;
    if (name == "all") return SchemeSelector::all;
    return std::nullopt;
}

std::string format_real(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const SweepConfig& config) {
    validate_axis("p", config.p_min, config.p_max, config.p_steps, 0.0, 0.5);
    validate_axis("theta", config.theta_min, config.theta_max, config.theta_steps, 0.0, kHalfPi);
    if (config.chi_steps > 0) {
        validate_axis("chi", config.chi_min, config.chi_max, config.chi_steps, 0.0, kHalfPi);
    } else if (config.chi_steps < 0) {
        throw std::invalid_argument("chi steps must be nonnegative");
    }
    const bool has_chi = config.chi_steps > 0;
    const ColumnSet cols = columns_for(config.scheme, has_chi);

    std::string header = "p,theta";
    if (has_chi) header += ",chi";
    if (cols.f_n) header += ",f_n";
    if (cols.f_dr1) header += ",f_dr1";
    if (cols.f_dr2) header += ",f_dr2";
    if (cols.f_qc) header += ",f_qc";
    if (cols.f_qc_opt) header += ",f_qc_opt";
    if (cols.chi_opt) header += ",chi_opt";
    if (cols.f_dif) header += ",f_dif";

    const int total = config.p_steps * config.theta_steps * (has_chi ? config.chi_steps : 1);
    std::vector<std::string> rows(static_cast<size_t>(total));

    int n_threads = config.n_threads;
    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::min(8u, std::max(1u, std::thread::hardware_concurrency())));
    }
    n_threads = std::min(n_threads, total);
    // Rows are a pure function of the row index, so any thread layout yields
    // the same bytes; the single writer below fixes the order.
    std::vector<std::thread> workers;
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t]() {
            for (int i = t; i < total; i += n_threads) {
                rows[static_cast<size_t>(i)] = sweep_row(config, cols, i);
            }
        });
    }
    for (auto& w : workers) w.join();

    out << header << '\n';
    for (const auto& row : rows) out << row << '\n';
}

int cmd_fidelity(double p, double theta, std::optional<double> chi,
                 SchemeSelector scheme, std::ostream& out, std::ostream& err) {
    try {
        const TaskParams task(p, theta);
        const double chi_used = chi.has_value() ? *chi : chi_opt(task);
        if (!(chi_used >= 0.0 && chi_used <= kHalfPi)) {
            throw std::invalid_argument("chi must lie in [0, pi/2]");
        }
        std::string line = "p=" + format_real(p) + " theta=" + format_real(theta);
        const bool qc_part = scheme == SchemeSelector::qc || scheme == SchemeSelector::all;
        if (qc_part) {
            line += " chi=" + format_real(chi_used);
            line += " eta=" + format_real(eta_opt(task, chi_used));
        }
        if (scheme == SchemeSelector::nothing || scheme == SchemeSelector::all) {
            line += " f_n=" + format_real(do_nothing_fidelity(task));
        }
        if (scheme == SchemeSelector::all) {
            line += " p_helstrom=" + format_real(helstrom_probability(theta));
        }
        if (scheme == SchemeSelector::dr1 || scheme == SchemeSelector::all) {
            line += " f_dr1=" + format_real(dr_fidelity(1, theta));
        }
        if (scheme == SchemeSelector::dr2 || scheme == SchemeSelector::all) {
            line += " f_dr2=" + format_real(dr_fidelity(2, theta));
        }
        if (qc_part) {
            line += " f_qc=" + format_real(fqc(task, chi_used));
            line += " chi_opt=" + format_real(chi_opt(task));
            line += " f_qc_opt=" + format_real(fqc_opt(task));
        }
        if (scheme == SchemeSelector::all) {
            line += " f_dif=" + format_real(f_dif(task));
        }
        out << line << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path, std::ostream& err) {
    std::ostringstream body;
    try {
        write_sweep_csv(body, config);
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "cannot open output file: " << out_path << '\n';
        return kExitIo;
    }
    file << body.str();
    file.flush();
    if (!file) {
        err << "write failed: " << out_path << '\n';
        return kExitIo;
    }
    return kExitOk;
}

FindMaxResult find_max_fdif(int density, double p_lo, double p_hi, double theta_lo, double theta_hi) {
    if (density < 100) throw std::invalid_argument("grid density must be at least 100");
    validate_axis("p", p_lo, p_hi, density, 0.0, 0.5);
    validate_axis("theta", theta_lo, theta_hi, density, 0.0, kHalfPi);

    auto fd = [](double p, double theta) { return f_dif(TaskParams(p, theta)); };

    FindMaxResult res;
    res.grid_f = -2.0;
    for (int i = 0; i < density; ++i) {
        const double p = grid_value(p_lo, p_hi, density, i);
        for (int j = 0; j < density; ++j) {
            const double theta = grid_value(theta_lo, theta_hi, density, j);
            const double v = fd(p, theta);
            if (v > res.grid_f) {
                res.grid_f = v;
                res.grid_p = p;
                res.grid_theta = theta;
            }
        }
    }

    const double hp = (p_hi - p_lo) / static_cast<double>(density - 1);
    const double ht = (theta_hi - theta_lo) / static_cast<double>(density - 1);
    const double pa = std::max(p_lo, res.grid_p - 2.0 * hp);
    const double pb = std::min(p_hi, res.grid_p + 2.0 * hp);
    const double ta = std::max(theta_lo, res.grid_theta - 2.0 * ht);
    const double tb = std::min(theta_hi, res.grid_theta + 2.0 * ht);

    // The maximum sits on the crossing ridge of the two competing reference
    // fidelities, where a plain coordinate search stalls. The theta pass
    // therefore re-optimizes p inside the local bracket for every probe, and
    // a final p pass polishes the result.
    auto best_p_at = [&](double theta) { return golden_max([&](double p) { return fd(p, theta); }, pa, pb); };
    res.theta = golden_max([&](double theta) { return fd(best_p_at(theta), theta); }, ta, tb);
    res.p = best_p_at(res.theta);
    res.f = fd(res.p, res.theta);
    return res;
}

int cmd_find_max_fdif(int density, double p_lo, double p_hi, double theta_lo,
                      double theta_hi, std::ostream& out, std::ostream& err) {
    try {
        const FindMaxResult res = find_max_fdif(density, p_lo, p_hi, theta_lo, theta_hi);
        out << "grid argmax: p=" << format_real(res.grid_p) << " theta=" << format_real(res.grid_theta)
            << " f_dif=" << format_real(res.grid_f) << '\n';
        out << "refined: p=" << format_real(res.p) << " theta=" << format_real(res.theta)
            << " f_dif=" << format_real(res.f) << '\n';
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    }
}

CertifySummary run_certification(int density, std::int64_t n_samples, std::uint64_t seed,
                                 double b0_perturbation) {
    if (density < 2) throw std::invalid_argument("grid density must be at least 2");
    if (n_samples < 1) throw std::invalid_argument("samples must be at least 1");

    CertifySummary sum;
    sum.worst_quantum_slack = 1.0;
    sum.worst_classical_slack = 1.0;

    std::vector<ChoiMatrix> sampled;
    sampled.reserve(static_cast<size_t>(n_samples));
    for (std::int64_t i = 0; i < n_samples; ++i) {
        sampled.push_back(choi(random_cptp_channel(seed + static_cast<std::uint64_t>(i))));
    }
    sum.oracle_max_fidelity = -1.0;

    const ComplexMatrix x_in = kron(pauli(Axis::x), ComplexMatrix::identity(2));

    for (int i = 0; i < density; ++i) {
        const double p = grid_value(0.0, 0.5, density, i);
        for (int j = 0; j < density; ++j) {
            const double theta = grid_value(0.0, kHalfPi, density, j);
            const TaskParams task(p, theta);
            const RMatrix r = r_matrix(task);
            const QuantumDualCertificate q = quantum_dual(task);
            const ClassicalDualCertificate c = classical_dual(task);

            double q_slack = q.min_eig_slack;
            if (b0_perturbation != 0.0 && !q.degenerate) {
                const double b0p = q.b0 - b0_perturbation;
                ComplexMatrix feas = ComplexMatrix::identity(4);
                feas *= b0p;
                ComplexMatrix xi = x_in;
                xi *= task.rx() * b0p;
                feas += xi;
                feas -= r.matrix;
                q_slack = eig_hermitian(feas).front();
            }
            if (!q.degenerate && q_slack < sum.worst_quantum_slack) {
                sum.worst_quantum_slack = q_slack;
                if (q_slack < -1e-9) {
                    sum.worst_offender = "quantum dual slack " + format_real(q_slack) + " at p=" +
                                         format_real(p) + " theta=" + format_real(theta);
                }
            }
            if (c.min_eig_slack < sum.worst_classical_slack) {
                sum.worst_classical_slack = c.min_eig_slack;
                if (c.min_eig_slack < -1e-9 && sum.worst_offender.empty()) {
                    sum.worst_offender = "classical dual slack " + format_real(c.min_eig_slack) +
                                         " at p=" + format_real(p) + " theta=" + format_real(theta);
                }
            }
            sum.max_quantum_bound_mismatch =
                std::max(sum.max_quantum_bound_mismatch, std::abs(q.bound - fqc_opt(task)));
            sum.max_classical_bound_mismatch =
                std::max(sum.max_classical_bound_mismatch, std::abs(c.bound - dr_fidelity(2, theta)));

            const double q_gap =
                std::abs(q.bound - objective(r, choi(quantum_control_channel(task, chi_opt(task)))));
            const double c_gap = std::abs(c.bound - objective(r, choi(dr_channel(2, theta))));
            sum.max_quantum_gap = std::max(sum.max_quantum_gap, q_gap);
            sum.max_classical_gap = std::max(sum.max_classical_gap, c_gap);

            for (const auto& upsilon : sampled) {
                const double f = objective(r, upsilon);
                sum.oracle_max_fidelity = std::max(sum.oracle_max_fidelity, f);
                sum.oracle_max_excess = std::max(sum.oracle_max_excess, f - q.bound);
            }
        }
    }

    sum.pass = sum.worst_quantum_slack >= -1e-9 && sum.worst_classical_slack >= -1e-9 &&
               sum.max_quantum_bound_mismatch <= 1e-12 && sum.max_classical_bound_mismatch <= 1e-12 &&
               sum.max_quantum_gap <= 1e-9 && sum.max_classical_gap <= 1e-9 &&
               sum.oracle_max_excess <= 1e-9;
    if (!sum.pass && sum.worst_offender.empty()) {
        if (sum.max_quantum_bound_mismatch > 1e-12) {
            sum.worst_offender = "quantum bound mismatch " + format_real(sum.max_quantum_bound_mismatch);
        } else if (sum.max_classical_bound_mismatch > 1e-12) {
            sum.worst_offender = "classical bound mismatch " + format_real(sum.max_classical_bound_mismatch);
        } else if (sum.max_quantum_gap > 1e-9) {
            sum.worst_offender = "quantum duality gap " + format_real(sum.max_quantum_gap);
        } else if (sum.max_classical_gap > 1e-9) {
            sum.worst_offender = "classical duality gap " + format_real(sum.max_classical_gap);
        } else if (sum.oracle_max_excess > 1e-9) {
            sum.worst_offender = "oracle excess over bound " + format_real(sum.oracle_max_excess);
        }
    }
    return sum;
}

int cmd_certify(int density, std::int64_t n_samples, std::uint64_t seed,
                double b0_perturbation, std::ostream& out, std::ostream& err) {
    CertifySummary sum;
    try {
        sum = run_certification(density, n_samples, seed, b0_perturbation);
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << '\n';
        return kExitUsage;
    }
    out << "quantum dual: worst slack " << format_real(sum.worst_quantum_slack)
        << ", max bound mismatch " << format_real(sum.max_quantum_bound_mismatch)
        << ", max gap " << format_real(sum.max_quantum_gap) << '\n';
    out << "classical dual: worst slack " << format_real(sum.worst_classical_slack)
        << ", max bound mismatch " << format_real(sum.max_classical_bound_mismatch)
        << ", max gap " << format_real(sum.max_classical_gap) << '\n';
    out << "oracle: max fidelity " << format_real(sum.oracle_max_fidelity)
        << ", max excess over bound " << format_real(sum.oracle_max_excess) << '\n';
    if (sum.pass) {
        out << "result: PASS\n";
        return kExitOk;
    }
    out << "result: FAIL (" << sum.worst_offender << ")\n";
    return kExitCertification;
}

}  // namespace qfc::cli
