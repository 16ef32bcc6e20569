#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qfc/certify.hpp"

namespace qfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCertification = 2;
inline constexpr int kExitIo = 3;

enum class SchemeSelector { nothing, dr1, dr2, qc, all };
std::optional<SchemeSelector> parse_scheme(const std::string& name);

// Real values are serialized with 12 significant digits, '.' separator,
// locale free, so golden files are byte stable across platforms.
std::string format_real(double v);

// A sweep is a uniform grid, endpoints included, over up to three axes.
// An axis with steps == 1 is pinned (min == max required). chi_steps == 0
// omits the chi axis and the chi-dependent columns entirely.
struct SweepConfig {
    double p_min = 0.0;
    double p_max = 0.5;
    int p_steps = 10;
    double theta_min = 0.0;
    double theta_max = 1.5707963267948966;
    int theta_steps = 10;
    int chi_steps = 0;
    double chi_min = 0.0;
    double chi_max = 1.5707963267948966;
    SchemeSelector scheme = SchemeSelector::all;
    int n_threads = 0;  // 0 = hardware default
};

// Header plus one row per grid point, deterministic byte-identical output
// for identical config regardless of thread count.
void write_sweep_csv(std::ostream& out, const SweepConfig& config);

int cmd_fidelity(double p, double theta, std::optional<double> chi,
                 SchemeSelector scheme, std::ostream& out, std::ostream& err);

int cmd_sweep(const SweepConfig& config, const std::string& out_path, std::ostream& err);

struct FindMaxResult {
    double grid_p = 0.0;
    double grid_theta = 0.0;
    double grid_f = 0.0;
    double p = 0.0;
    double theta = 0.0;
    double f = 0.0;
};

// Grid argmax of f_dif followed by local golden-section refinement along each
// axis (20 iterations per search; the theta pass re-optimizes p locally so
// the search tracks the crossing ridge of the two competing lower bounds).
FindMaxResult find_max_fdif(int density, double p_lo = 0.0, double p_hi = 0.5,
                            double theta_lo = 0.0, double theta_hi = 1.5707963267948966);

int cmd_find_max_fdif(int density, double p_lo, double p_hi, double theta_lo,
                      double theta_hi, std::ostream& out, std::ostream& err);

struct CertifySummary {
    double worst_quantum_slack = 0.0;    // min over grid, threshold >= -1e-9
    double worst_classical_slack = 0.0;  // min over grid, threshold >= -1e-9
    double max_quantum_bound_mismatch = 0.0;    // |2 b0 - fqc_opt|, <= 1e-12
    double max_classical_bound_mismatch = 0.0;  // |2 a0 - f_dr2|,  <= 1e-12
    double max_quantum_gap = 0.0;    // |bound - objective at the feedback Choi|, <= 1e-9
    double max_classical_gap = 0.0;  // |bound - objective at the variant 2 Choi|, <= 1e-9
    double oracle_max_excess = 0.0;  // max objective - bound over samples x grid, <= 1e-9
    double oracle_max_fidelity = 0.0;
    bool pass = false;
    std::string worst_offender;
};

// Dual certification on a density x density task grid plus the random channel
// oracle evaluated against every grid task. b0_perturbation is a test hook
// subtracted from every quantum b0 before the feasibility check.
CertifySummary run_certification(int density, std::int64_t n_samples, std::uint64_t seed,
                                 double b0_perturbation = 0.0);

int cmd_certify(int density, std::int64_t n_samples, std::uint64_t seed,
                double b0_perturbation, std::ostream& out, std::ostream& err);

}  // namespace qfc::cli
