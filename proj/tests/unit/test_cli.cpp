#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "qfc/cli.hpp"

using namespace qfc;
using namespace qfc::cli;

namespace {
constexpr double kHalfPi = 1.5707963267948966;

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += (c == '\n');
    return n;
}
}  // namespace

TEST_CASE("real number formatting is locale free and trims noise") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(-0.25) == "-0.25");
    CHECK(format_real(3.14159265358979323846) == "3.14159265359");
    CHECK(format_real(1e-5) == "1e-05");
    CHECK(format_real(0.9173259585761115) == "0.917325958576");
}

TEST_CASE("scheme names parse") {
    CHECK(parse_scheme("nothing") == SchemeSelector::nothing);
    CHECK(parse_scheme("dr1") == SchemeSelector::dr1);
    CHECK(parse_scheme("dr2") == SchemeSelector::dr2);
    CHECK(parse_scheme("qc") == SchemeSelector::qc);
    CHECK(parse_scheme("all") == SchemeSelector::all);
    CHECK_FALSE(parse_scheme("everything").has_value());
}

TEST_CASE("sweep layout without a strength axis") {
    SweepConfig config;
    config.p_steps = 4;
    config.theta_steps = 3;
    std::ostringstream out;
    write_sweep_csv(out, config);
    const std::string text = out.str();

    CHECK(text.rfind("p,theta,f_n,f_dr1,f_dr2,f_qc_opt,chi_opt,f_dif\n", 0) == 0);
    CHECK(count_lines(text) == 1 + 4 * 3);
    CHECK(text.find('\r') == std::string::npos);

    // first row is the grid origin; last row is the opposite corner
    CHECK(text.find("\n0,0,") != std::string::npos);
    const std::string half_pi = format_real(kHalfPi);
    CHECK(text.find("\n0.5," + half_pi + ",") != std::string::npos);
}

TEST_CASE("sweep layout with a strength axis") {
    SweepConfig config;
    config.p_steps = 2;
    config.theta_steps = 2;
    config.chi_steps = 3;
    std::ostringstream out;
    write_sweep_csv(out, config);
    const std::string text = out.str();
    CHECK(text.rfind("p,theta,chi,f_n,f_dr1,f_dr2,f_qc,f_qc_opt,chi_opt,f_dif\n", 0) == 0);
    CHECK(count_lines(text) == 1 + 2 * 2 * 3);
}

TEST_CASE("scheme selection trims the columns") {
    SweepConfig config;
    config.p_steps = 2;
    config.theta_steps = 2;
    config.scheme = SchemeSelector::nothing;
    std::ostringstream out;
    write_sweep_csv(out, config);
    CHECK(out.str().rfind("p,theta,f_n\n", 0) == 0);

    config.scheme = SchemeSelector::qc;
    std::ostringstream qc_out;
    write_sweep_csv(qc_out, config);
    CHECK(qc_out.str().rfind("p,theta,f_qc_opt,chi_opt\n", 0) == 0);
}

TEST_CASE("sweep bytes do not depend on the thread count") {
    SweepConfig config;
    config.p_steps = 7;
    config.theta_steps = 9;
    config.chi_steps = 4;

    std::string previous;
    for (int threads : {1, 3, 8}) {
        config.n_threads = threads;
        std::ostringstream out;
        write_sweep_csv(out, config);
        if (!previous.empty()) CHECK(out.str() == previous);
        previous = out.str();
    }
}

TEST_CASE("pinned axes") {
    SweepConfig config;
    config.p_steps = 1;
    config.p_min = 0.145;
    config.p_max = 0.145;
    config.theta_steps = 5;
    std::ostringstream out;
    write_sweep_csv(out, config);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.rfind("0.145,", 0) == 0);
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("sweep validation") {
    std::ostringstream out;
    SweepConfig config;

    config.p_min = 0.3;
    config.p_max = 0.1;
    CHECK_THROWS_AS(write_sweep_csv(out, config), std::invalid_argument);

    config = SweepConfig{};
    config.p_steps = 1;  // pinned but min != max
    CHECK_THROWS_AS(write_sweep_csv(out, config), std::invalid_argument);

    config = SweepConfig{};
    config.theta_max = 2.0;  // outside the domain
    CHECK_THROWS_AS(write_sweep_csv(out, config), std::invalid_argument);

    config = SweepConfig{};
    config.chi_steps = -1;
    CHECK_THROWS_AS(write_sweep_csv(out, config), std::invalid_argument);
}

TEST_CASE("single point command") {
    {
        std::ostringstream out, err;
        const int rc = cmd_fidelity(0.5, 0.0, std::nullopt, SchemeSelector::nothing, out, err);
        CHECK(rc == kExitOk);
        CHECK(out.str() == "p=0.5 theta=0 f_n=0.5\n");
        CHECK(err.str().empty());
    }
    {
        std::ostringstream out, err;
        const int rc = cmd_fidelity(0.115, 0.715, std::nullopt, SchemeSelector::all, out, err);
        CHECK(rc == kExitOk);
        const std::string line = out.str();
        for (const char* field : {"p=", "theta=", "chi=", "eta=", "f_n=", "p_helstrom=", "f_dr1=",
                                  "f_dr2=", "f_qc=", "chi_opt=", "f_qc_opt=", "f_dif="}) {
            CHECK(line.find(field) != std::string::npos);
        }
    }
    {
        std::ostringstream out, err;
        const int rc = cmd_fidelity(0.7, 0.3, std::nullopt, SchemeSelector::all, out, err);
        CHECK(rc == kExitUsage);
        CHECK(err.str().find("p must") != std::string::npos);
        CHECK(out.str().empty());
    }
    {
        std::ostringstream out, err;
        const int rc = cmd_fidelity(0.1, 0.3, 2.0, SchemeSelector::qc, out, err);
        CHECK(rc == kExitUsage);
        CHECK(err.str().find("chi must") != std::string::npos);
    }
}

TEST_CASE("sweep command writes files and reports io failures") {
    const std::string path = "/tmp/qfc_unit_sweep.csv";
    std::remove(path.c_str());
    SweepConfig config;
    config.p_steps = 3;
    config.theta_steps = 3;

    std::ostringstream err;
    CHECK(cmd_sweep(config, path, err) == kExitOk);
    std::ifstream in(path);
    REQUIRE(static_cast<bool>(in));
    std::string header;
    std::getline(in, header);
    CHECK(header == "p,theta,f_n,f_dr1,f_dr2,f_qc_opt,chi_opt,f_dif");
    in.close();
    std::remove(path.c_str());

    std::ostringstream err2;
    CHECK(cmd_sweep(config, "/nonexistent-dir/out.csv", err2) == kExitIo);
    CHECK(err2.str().find("cannot open") != std::string::npos);

    config.p_min = 0.4;
    config.p_max = 0.1;
    std::ostringstream err3;
    CHECK(cmd_sweep(config, path, err3) == kExitUsage);
}

TEST_CASE("advantage maximization") {
    CHECK_THROWS_AS(find_max_fdif(99), std::invalid_argument);
    CHECK_THROWS_AS(find_max_fdif(100, 0.4, 0.1, 0.0, kHalfPi), std::invalid_argument);

    const FindMaxResult res = find_max_fdif(100);
    CHECK(std::abs(res.p - 0.115) < 0.01);
    CHECK(std::abs(res.theta - 0.715) < 0.01);
    CHECK(std::abs(res.f - 0.0263524) < 1e-3);
    CHECK(res.f >= res.grid_f - 1e-12);
    CHECK(std::abs(res.grid_p - res.p) < 0.02);

    // with the noise strength capped the advantage shrinks an order of magnitude
    const FindMaxResult capped = find_max_fdif(100, 0.0, 0.01, 0.0, kHalfPi);
    CHECK(capped.f <= 0.005);
    CHECK(capped.f >= 0.0);
}

TEST_CASE("certification summary") {
    CHECK_THROWS_AS(run_certification(1, 10, 42), std::invalid_argument);
    CHECK_THROWS_AS(run_certification(5, 0, 42), std::invalid_argument);

    const CertifySummary sum = run_certification(6, 20, 42);
    CHECK(sum.pass);
    CHECK(sum.worst_quantum_slack >= -1e-9);
    CHECK(sum.worst_classical_slack >= -1e-9);
    CHECK(sum.max_quantum_bound_mismatch <= 1e-12);
    CHECK(sum.max_classical_bound_mismatch <= 1e-12);
    CHECK(sum.max_quantum_gap <= 1e-9);
    CHECK(sum.max_classical_gap <= 1e-9);
    CHECK(sum.oracle_max_excess <= 1e-9);
    CHECK(sum.oracle_max_fidelity > 0.5);
    CHECK(sum.oracle_max_fidelity < 1.0);

    // the checker is not vacuous: a spoiled certificate is caught
    const CertifySummary broken = run_certification(5, 5, 42, 1e-3);
    CHECK_FALSE(broken.pass);
    CHECK(broken.worst_quantum_slack < -1e-9);
    CHECK(broken.worst_offender.find("quantum") != std::string::npos);
}

TEST_CASE("certification command exit codes") {
    {
        std::ostringstream out, err;
        CHECK(cmd_certify(5, 10, 42, 0.0, out, err) == kExitOk);
        CHECK(out.str().find("result: PASS") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        CHECK(cmd_certify(5, 10, 42, 1e-3, out, err) == kExitCertification);
        CHECK(out.str().find("result: FAIL") != std::string::npos);
    }
    {
        std::ostringstream out, err;
        CHECK(cmd_certify(1, 10, 42, 0.0, out, err) == kExitUsage);
        CHECK(err.str().find("parameter error") != std::string::npos);
    }
}
