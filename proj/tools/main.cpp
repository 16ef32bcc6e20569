#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "qfc/cli.hpp"

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-qubit dephasing control schemes: closed forms, simulation, optimality certificates"};
    app.require_subcommand(1);

    std::string scheme_name = "all";

    auto* fid = app.add_subcommand("fidelity", "Report every scheme fidelity at one task point");
    double fid_p = 0.0;
    double fid_theta = 0.0;
    double fid_chi = -1.0;
    fid->add_option("--p", fid_p, "dephasing probability")->required();
    fid->add_option("--theta", fid_theta, "input separation angle (radians)")->required();
    auto* fid_chi_opt = fid->add_option("--chi", fid_chi, "measurement strength (radians), default chi_opt");
    fid->add_option("--scheme", scheme_name, "nothing|dr1|dr2|qc|all");

    auto* sweep = app.add_subcommand("sweep", "Emit a CSV fidelity sweep over a parameter grid");
    qfc::cli::SweepConfig config;
    std::string out_path = "-";
    int sweep_grid = 0;
    double sweep_p = -1.0;
    double sweep_theta = -1.0;
    sweep->add_option("--grid", sweep_grid, "points per axis for both p and theta");
    sweep->add_option("--p-steps", config.p_steps, "grid points along p");
    sweep->add_option("--theta-steps", config.theta_steps, "grid points along theta");
    sweep->add_option("--p-min", config.p_min, "lower p bound");
    sweep->add_option("--p-max", config.p_max, "upper p bound");
    sweep->add_option("--theta-min", config.theta_min, "lower theta bound");
    sweep->add_option("--theta-max", config.theta_max, "upper theta bound");
    auto* pin_p = sweep->add_option("--p", sweep_p, "pin p to one value");
    auto* pin_theta = sweep->add_option("--theta", sweep_theta, "pin theta to one value");
    sweep->add_option("--chi-steps", config.chi_steps, "add a chi axis with this many points");
    sweep->add_option("--out", out_path, "output path, - for stdout");
    sweep->add_option("--scheme", scheme_name, "nothing|dr1|dr2|qc|all");

    auto* findmax = app.add_subcommand("find-max-fdif", "Locate the largest feedback advantage");
    int fm_grid = 500;
    double fm_p_min = 0.0;
    double fm_p_max = 0.5;
    double fm_theta_min = 0.0;
    double fm_theta_max = kHalfPi;
    findmax->add_option("--grid", fm_grid, "grid density per axis (at least 100)");
    findmax->add_option("--p-min", fm_p_min, "lower p bound");
    findmax->add_option("--p-max", fm_p_max, "upper p bound");
    findmax->add_option("--theta-min", fm_theta_min, "lower theta bound");
    findmax->add_option("--theta-max", fm_theta_max, "upper theta bound");

    auto* certify = app.add_subcommand("certify", "Verify both dual certificates and the random-channel bound");
    int ct_grid = 50;
    std::int64_t ct_samples = 1000;
    std::uint64_t ct_seed = 42;
    double ct_perturb = 0.0;
    certify->add_option("--grid", ct_grid, "task grid density per axis");
    certify->add_option("--samples", ct_samples, "random channels to sample");
    certify->add_option("--seed", ct_seed, "oracle seed");
    certify->add_option("--perturb-b0", ct_perturb, "test hook: subtract this from b0 before the slack check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return qfc::cli::kExitUsage;
    }

    const auto scheme = qfc::cli::parse_scheme(scheme_name);
    if (!scheme.has_value()) {
        std::cerr << "parameter error: scheme must be one of nothing|dr1|dr2|qc|all\n";
        return qfc::cli::kExitUsage;
    }

    if (fid->parsed()) {
        std::optional<double> chi;
        if (fid_chi_opt->count() > 0) chi = fid_chi;
        return qfc::cli::cmd_fidelity(fid_p, fid_theta, chi, *scheme, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        if (sweep_grid > 0) {
            config.p_steps = sweep_grid;
            config.theta_steps = sweep_grid;
        }
        if (pin_p->count() > 0) {
            config.p_min = sweep_p;
            config.p_max = sweep_p;
            config.p_steps = 1;
        }
        if (pin_theta->count() > 0) {
            config.theta_min = sweep_theta;
            config.theta_max = sweep_theta;
            config.theta_steps = 1;
        }
        config.scheme = *scheme;
        return qfc::cli::cmd_sweep(config, out_path, std::cerr);
    }
    if (findmax->parsed()) {
        return qfc::cli::cmd_find_max_fdif(fm_grid, fm_p_min, fm_p_max, fm_theta_min, fm_theta_max,
                                           std::cout, std::cerr);
    }
    if (certify->parsed()) {
        return qfc::cli::cmd_certify(ct_grid, ct_samples, ct_seed, ct_perturb, std::cout, std::cerr);
    }
    return qfc::cli::kExitUsage;
}
