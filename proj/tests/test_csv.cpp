#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "snyder/csv.hpp"

namespace csv = snyder::csv;
namespace classical = snyder::classical;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_SUITE("csv") {

TEST_CASE("format_double round-trips awkward values exactly") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02e23, -2.5000000000000004,
                     123456789.123456789, 0.0}) {
        const std::string s = csv::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(csv::format_double(1.0) == "1");
    CHECK(csv::format_double(-0.5) == "-0.5");
    // NaN is printed literally; readers treat it as missing data.
    CHECK(csv::format_double(std::nan("")).find("nan") != std::string::npos);
}

TEST_CASE("trajectory serialization") {
    classical::Trajectory traj;
    traj.params = snyder::validate(0.0, 2.0);
    traj.source = classical::Source::Integrated;
    traj.t0 = 0.0;
    traj.dt = 0.5;
    traj.samples = {{1.0, 0.0}, {0.5, -1.0}};
    std::ostringstream os;
    csv::write_trajectory(os, traj);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "t,q,p,invariant");
    // invariant = p^2 + w^2 q^2 with w = 2.
    CHECK(lines[1] == "0,1,0,4");
    CHECK(lines[2] == "0.5,0.5,-1,2");
}

TEST_CASE("harmonic spectrum serialization") {
    snyder::harmonics::HarmonicSpectrum spec;
    spec.fundamental = 0.8;
    spec.cosine_coeffs = {0.0, 1.0, 0.0};
    spec.sine_coeffs = {0.0, 0.0, 0.25};
    spec.residual = 1e-9;
    std::ostringstream os;
    csv::write_spectrum(os, spec);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "k,cos_coeff,sin_coeff");
    CHECK(lines[1] == "0,0,0");
    CHECK(lines[2] == "1,1,0");
    CHECK(lines[3] == "2,0,0.25");
}

TEST_CASE("comparison table serialization") {
    std::vector<snyder::harmonics::ComparisonRow> rows(2);
    rows[0] = {0, 0.0, 0.1, 0.1, 1.0};
    rows[1] = {1, 1.0, 1.0, 0.0, 0.0};
    std::ostringstream os;
    csv::write_comparison(os, rows);
    const std::vector<std::string> lines = lines_of(os.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "k,measured,perturbative,abs_dev,rel_dev");
    // %.17g always prints 17 significant digits for inexact values.
    CHECK(lines[1] == "0,0,0.10000000000000001,0.10000000000000001,1");
    CHECK(lines[2] == "1,1,1,0,0");
}

TEST_CASE("eigen spectrum serialization variants") {
    snyder::EigenSpectrum spec;
    spec.eigenvalues = {0.5, 1.5};
    spec.converged = {1, 0};
    spec.bound = {1, 0};

    std::ostringstream plain;
    csv::write_eigen_spectrum(plain, spec);
    const std::vector<std::string> pl = lines_of(plain.str());
    CHECK(pl[0] == "n,energy,converged");
    CHECK(pl[1] == "0,0.5,1");
    CHECK(pl[2] == "1,1.5,0");

    std::ostringstream fock;
    csv::write_fock_spectrum(fock, spec, {0.5, 1.6});
    const std::vector<std::string> fl = lines_of(fock.str());
    CHECK(fl[0] == "n,energy,converged,paper_energy");
    CHECK(fl[1] == "0,0.5,1,0.5");
    CHECK(fl[2] == "1,1.5,0,1.6000000000000001");

    std::ostringstream grid;
    csv::write_grid_spectrum(grid, spec);
    const std::vector<std::string> gl = lines_of(grid.str());
    CHECK(gl[0] == "n,energy,converged,bound");
    CHECK(gl[1] == "0,0.5,1,1");
    CHECK(gl[2] == "1,1.5,0,0");
}

TEST_CASE("deviation table serialization") {
    std::ostringstream os;
    csv::write_deviation_table(os, {0.5, 1.4}, {0.5, 1.5});
    const std::vector<std::string> lines = lines_of(os.str());
    CHECK(lines[0] == "n,energy,reference,abs_dev");
    CHECK(lines[1] == "0,0.5,0.5,0");
    CHECK(lines[2] == "1,1.3999999999999999,1.5,0.10000000000000009");
}

TEST_CASE("matrix dump lists exactly the nonzero band") {
    const snyder::SnyderParams p = snyder::validate(0.3, 1.0);
    const snyder::fock::FockMatrix m = snyder::fock::build_hamiltonian_paper(p, 4);
    std::ostringstream os;
    csv::write_matrix_dump(os, m);
    const std::vector<std::string> lines = lines_of(os.str());
    CHECK(lines[0] == "i,j,value");
    // 4 diagonal + 2 upper + 2 lower band entries.
    CHECK(lines.size() == 1 + 4 + 4);
    CHECK(lines[1].rfind("0,0,", 0) == 0);
}

TEST_CASE("serialization is deterministic") {
    snyder::EigenSpectrum spec;
    spec.eigenvalues = {0.123456789123456789, 2.0 / 3.0};
    spec.converged = {1, 1};
    std::ostringstream a, b;
    csv::write_eigen_spectrum(a, spec);
    csv::write_eigen_spectrum(b, spec);
    CHECK(a.str() == b.str());
}

}  // TEST_SUITE
