#pragma once

// Shared plumbing for the test binaries: run the CLI as a subprocess, read
// files, and an independently derived closed form of kernel convolution used
// as an oracle against the Kunneth/GRR engine.

#include "fmk/fm.hpp"
#include "fmk/lattice.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fmk_test {

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FMK_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), n);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture(const std::string& name) {
    return std::string(FMK_FIXTURE_DIR) + "/" + name;
}

inline std::string golden(const std::string& name) {
    return std::string(FMK_GOLDEN_DIR) + "/" + name;
}

// Closed form of convolve, derived independently of the engine by expanding
// pull_12(ch e1) . pull_23(ch e2) . (1 - (g' - 1)[pt_2]) and integrating the
// middle slot. Middle genus g' = e1.genus_target.
inline fmk::KernelClass convolve_oracle(const fmk::KernelClass& e1, const fmk::KernelClass& e2) {
    using fmk::Rational;
    const Rational u = e1.genus_target - 1;
    const Rational r = e2.a * e1.rank + e1.b * e2.rank - u * e1.rank * e2.rank;
    const Rational a = e1.a * e2.a + e1.ch2 * e2.rank - u * e1.a * e2.rank;
    const Rational b = e1.b * e2.b + e1.rank * e2.ch2 - u * e1.rank * e2.b;
    const Rational s = e1.ch2 * e2.b + e1.a * e2.ch2 - u * e1.a * e2.b;
    const fmk::RatMat gamma =
        e1.gamma * fmk::SymplecticLattice::standard(e1.genus_target).form * e2.gamma;
    return fmk::KernelClass(e1.genus_source, e2.genus_target, r, a, b, gamma, s);
}

} // namespace fmk_test
