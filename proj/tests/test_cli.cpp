// End-to-end tests that spawn the actual CLI binary. The build injects the
// binary location through the SNYDER_CLI_PATH compile definition; each case
// runs in a fresh scratch directory so artifacts never collide.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#ifndef SNYDER_CLI_PATH
#error "SNYDER_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

int scratch_counter = 0;

fs::path fresh_scratch() {
    const fs::path dir = fs::path("cli_scratch") / std::to_string(scratch_counter++);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const fs::path& dir, const std::string& args) {
    const fs::path out = dir / "stdout.txt";
    std::ostringstream cmd;
    cmd << "cd \"" << dir.string() << "\" && \"" << SNYDER_CLI_PATH << "\" " << args
        << " > stdout.txt 2> stderr.txt";
    const int raw = std::system(cmd.str().c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream is(out);
    std::stringstream ss;
    ss << is.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

std::size_t line_count(const fs::path& file) {
    std::ifstream is(file);
    std::string line;
    std::size_t n = 0;
    while (std::getline(is, line)) ++n;
    return n;
}

std::string read_file(const fs::path& file) {
    std::ifstream is(file);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string first_line(const fs::path& file) {
    std::ifstream is(file);
    std::string line;
    std::getline(is, line);
    return line;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("help exits 0, missing subcommand exits 2") {
    const fs::path dir = fresh_scratch();
    CHECK(run_cli(dir, "--help").exit_code == 0);
    CHECK(run_cli(dir, "").exit_code == 2);
    CHECK(run_cli(dir, "--no-such-flag simulate").exit_code == 2);
    CHECK(run_cli(dir, "frobnicate").exit_code == 2);
}

TEST_CASE("simulate writes both trajectories and a summary") {
    const fs::path dir = fresh_scratch();
    const RunResult r = run_cli(dir, "--l 0.1 simulate --periods 2");
    CHECK(r.exit_code == 0);
    CHECK(first_line(dir / "trajectory.csv") == "t,q,p,invariant");
    // 2 periods at 1000 steps each, plus the initial sample and the header.
    CHECK(line_count(dir / "trajectory.csv") == 2002);
    CHECK(line_count(dir / "trajectory_closed.csv") == 2002);
    CHECK(r.stdout_text.find("drift=") != std::string::npos);
    CHECK(r.stdout_text.find("regime=oscillatory") != std::string::npos);
}

TEST_CASE("simulate validates parameters through exit codes") {
    const fs::path dir = fresh_scratch();
    CHECK(run_cli(dir, "--omega 0 simulate").exit_code == 2);
    CHECK(run_cli(dir, "--omega -1 simulate").exit_code == 2);
    CHECK(run_cli(dir, "--l -0.5 simulate").exit_code == 2);
    CHECK(run_cli(dir, "--mass 0 simulate").exit_code == 2);
    CHECK(run_cli(dir, "--omega simulate").exit_code == 2);  // missing value
    // Step too coarse for the oscillation.
    CHECK(run_cli(dir, "--l 0.1 simulate --dt 10").exit_code == 2);
}

TEST_CASE("cutoff regime integrates but reports no period") {
    const fs::path dir = fresh_scratch();
    const RunResult r = run_cli(dir, "--l 1.5 simulate --periods 1");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("regime=cutoff") != std::string::npos);
    CHECK(r.stdout_text.find("period=nan") != std::string::npos);
    CHECK(fs::exists(dir / "trajectory.csv"));
    // No closed form exists past the cutoff, so no comparison file appears.
    CHECK(!fs::exists(dir / "trajectory_closed.csv"));
    // Asking for the closed form explicitly is a computational error.
    CHECK(run_cli(dir, "--l 1.5 simulate --closed-form").exit_code == 1);
}

TEST_CASE("fourier requires --periods and enough of them") {
    const fs::path dir = fresh_scratch();
    CHECK(run_cli(dir, "--l 0.2 fourier").exit_code == 2);
    CHECK(run_cli(dir, "--l 0.2 fourier --periods 2").exit_code == 1);
    const RunResult r = run_cli(dir, "--l 0.2 fourier --periods 6 --harmonics 5");
    CHECK(r.exit_code == 0);
    CHECK(first_line(dir / "spectrum.csv") == "k,cos_coeff,sin_coeff");
    CHECK(line_count(dir / "spectrum.csv") == 7);
    CHECK(first_line(dir / "spectrum_compare.csv") ==
          "k,measured,perturbative,abs_dev,rel_dev");
    CHECK(r.stdout_text.find("c3_over_c1=") != std::string::npos);
}

TEST_CASE("fock writes the spectrum with the closed-form column") {
    const fs::path dir = fresh_scratch();
    const RunResult r =
        run_cli(dir, "--l 0.1 fock --dim 32 --levels 5 --backend normal");
    CHECK(r.exit_code == 0);
    CHECK(first_line(dir / "fock_spectrum.csv") == "n,energy,converged,paper_energy");
    CHECK(line_count(dir / "fock_spectrum.csv") == 6);
    CHECK(r.stdout_text.find("backend=") != std::string::npos);
    CHECK(r.stdout_text.find("backend_max_diff=") != std::string::npos);

    CHECK(run_cli(dir, "fock --backend bogus").exit_code == 2);
    CHECK(run_cli(dir, "fock --dim 2").exit_code == 2);

    const RunResult dump =
        run_cli(dir, "--l 0.1 fock --dim 8 --levels 3 --dump-matrix");
    CHECK(dump.exit_code == 0);
    CHECK(first_line(dir / "fock_spectrum_matrix.csv") == "i,j,value");
}

TEST_CASE("grid writes the spectrum and the deviation table") {
    const fs::path dir = fresh_scratch();
    const RunResult r = run_cli(dir, "grid --points 501 --levels 3");
    CHECK(r.exit_code == 0);
    CHECK(first_line(dir / "grid_spectrum.csv") == "n,energy,converged,bound");
    CHECK(line_count(dir / "grid_spectrum.csv") == 4);
    CHECK(first_line(dir / "grid_spectrum_deviation.csv") ==
          "n,energy,reference,abs_dev");
    // Undeformed default: lowest level is omega/2 up to stencil error.
    CHECK(r.stdout_text.find("e0=0.49") != std::string::npos);

    CHECK(run_cli(dir, "grid --points 50").exit_code == 2);
    CHECK(run_cli(dir, "--l 1 grid --rho-max 3").exit_code == 2);
}

TEST_CASE("sweep tags cutoff cells instead of failing") {
    const fs::path dir = fresh_scratch();
    const RunResult r = run_cli(
        dir, "sweep --workflow simulate --l-list 0,0.5,1.5 --omega-list 1");
    CHECK(r.exit_code == 0);
    const std::string text = read_file(dir / "sweep.csv");
    CHECK(first_line(dir / "sweep.csv") == "l,omega,workflow,key,value");
    CHECK(text.find("0,1,simulate,drift,") != std::string::npos);
    CHECK(text.find("0.5,1,simulate,period,") != std::string::npos);
    CHECK(text.find("1.5,1,simulate,error,CutoffRegime") != std::string::npos);

    CHECK(run_cli(dir, "sweep --workflow simulate --l-list 0").exit_code == 2);
    CHECK(run_cli(dir, "sweep --workflow nope --l-list 0 --omega-list 1").exit_code == 2);
}

TEST_CASE("config file supplies options and flags override it") {
    const fs::path dir = fresh_scratch();
    {
        std::ofstream ini(dir / "run.ini");
        ini << "l=0.2\n";
        ini << "[simulate]\n";
        ini << "periods=3\n";
        ini << "steps-per-period=500\n";
    }
    const RunResult from_config = run_cli(dir, "--config run.ini simulate");
    CHECK(from_config.exit_code == 0);
    CHECK(line_count(dir / "trajectory.csv") == 1502);

    const RunResult overridden =
        run_cli(dir, "--config run.ini simulate --periods 1");
    CHECK(overridden.exit_code == 0);
    CHECK(line_count(dir / "trajectory.csv") == 502);
}

TEST_CASE("repeated runs produce byte-identical artifacts") {
    const fs::path dir = fresh_scratch();
    CHECK(run_cli(dir, "--l 0.3 --output a.csv fourier --periods 6").exit_code == 0);
    CHECK(run_cli(dir, "--l 0.3 --output b.csv fourier --periods 6").exit_code == 0);
    CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
    CHECK(read_file(dir / "a_compare.csv") == read_file(dir / "b_compare.csv"));
    CHECK(read_file(dir / "a.csv").size() > 0);
}

TEST_CASE("plot flag emits a gnuplot script") {
    const fs::path dir = fresh_scratch();
    const RunResult r = run_cli(dir, "--l 0.1 --plot simulate --periods 2");
    CHECK(r.exit_code == 0);
    const std::string gp = read_file(dir / "trajectory.gp");
    CHECK(gp.find("plot 'trajectory.csv'") != std::string::npos);
    CHECK(gp.find("trajectory_closed.csv") != std::string::npos);
}

}  // TEST_SUITE
