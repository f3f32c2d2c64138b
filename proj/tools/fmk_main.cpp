// fmk: exact Fourier-Mukai kernel calculus for smooth projective curves.
//
// Exit codes: 0 success, 1 malformed input or usage error, 2 a mathematical
// check failed (fmk check / fmk selftest). Nothing else, ever.

#include "fmk/catalog.hpp"
#include "fmk/errors.hpp"
#include "fmk/kernel_io.hpp"
#include "fmk/report.hpp"
#include "fmk/selftest.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path)
        fmk::write_text_file(*out_path, content);
    else
        std::cout << content;
}

struct Options {
    std::string command;

    std::string analyze_path;
    bool analyze_json = false;

    std::string convolve_first;
    std::string convolve_second;

    std::string adjoint_side;
    std::string adjoint_path;

    std::string check_path;

    std::string catalog_name;
    fmk::CatalogParams catalog_params;
    bool catalog_list = false;

    int selftest_trials = fmk::kDefaultTrials;
    std::uint64_t selftest_seed = fmk::kDefaultSeed;

    std::optional<std::string> out_path;
};

int run(const Options& opt) {
    using namespace fmk;

    if (opt.command == "analyze") {
        const AnalysisReport report = analyze_kernel(load_kernel_file(opt.analyze_path));
        emit(opt.out_path, opt.analyze_json ? report_to_json(report) : report_to_text(report));
        return kExitOk;
    }
    if (opt.command == "convolve") {
        const KernelClass e1 = load_kernel_file(opt.convolve_first);
        const KernelClass e2 = load_kernel_file(opt.convolve_second);
        emit(opt.out_path, emit_kernel_json(convolve(e1, e2)));
        return kExitOk;
    }
    if (opt.command == "adjoint") {
        const KernelClass e = load_kernel_file(opt.adjoint_path);
        const KernelClass adj = opt.adjoint_side == "left" ? left_adjoint(e) : right_adjoint(e);
        emit(opt.out_path, emit_kernel_json(adj));
        return kExitOk;
    }
    if (opt.command == "check") {
        const KernelClass e = load_kernel_file(opt.check_path);
        const TorelliReport r = torelli_report(e);
        std::string text;
        text += std::string("numerical equivalence   ") + (r.numerical_equivalence ? "yes" : "no") + "\n";
        text += std::string("jac unimodular iso      ") + (r.jac_is_isomorphism ? "yes" : "no") + "\n";
        text += std::string("preserves polarization  ") + (r.jac_preserves_polarization ? "yes" : "no") + "\n";
        text += std::string("consistent              ") + (r.consistent ? "yes" : "no") + "\n";
        emit(opt.out_path, text);
        return r.consistent ? kExitOk : kExitCheckFailed;
    }
    if (opt.command == "catalog") {
        if (opt.catalog_list) {
            std::string text;
            for (const auto& name : catalog_names()) text += name + "\n";
            emit(opt.out_path, text);
            return kExitOk;
        }
        const CatalogEntry entry = catalog_kernel(opt.catalog_name, opt.catalog_params);
        emit(opt.out_path, emit_kernel_json(entry.kernel));
        return kExitOk;
    }
    if (opt.command == "selftest") {
        const SelftestReport report = run_selftest(opt.selftest_trials, opt.selftest_seed);
        std::cout << report.render();
        return report.ok() ? kExitOk : kExitCheckFailed;
    }
    std::cerr << "fmk: no subcommand given (try --help)\n";
    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact Fourier-Mukai kernel calculus on curves"};
    app.require_subcommand(0, 1);

    std::string out_path_raw;

    auto* analyze = app.add_subcommand("analyze", "analyze a kernel file and print a report");
    analyze->add_option("kernel", opt.analyze_path, "kernel JSON file")->required();
    analyze->add_flag("--json", opt.analyze_json, "emit the report as canonical JSON");
    analyze->add_option("-o,--output", out_path_raw, "write to a file instead of stdout");

    auto* convolve = app.add_subcommand("convolve", "convolve two composable kernels");
    convolve->add_option("first", opt.convolve_first, "kernel applied first")->required();
    convolve->add_option("second", opt.convolve_second, "kernel applied second")->required();
    convolve->add_option("-o,--output", out_path_raw, "write to a file instead of stdout");

    auto* adjoint = app.add_subcommand("adjoint", "kernel of the left or right adjoint");
    adjoint->add_option("side", opt.adjoint_side, "left or right")
        ->required()
        ->check(CLI::IsMember({"left", "right"}));
    adjoint->add_option("kernel", opt.adjoint_path, "kernel JSON file")->required();
    adjoint->add_option("-o,--output", out_path_raw, "write to a file instead of stdout");

    auto* check = app.add_subcommand("check", "run the Torelli consistency check");
    check->add_option("kernel", opt.check_path, "kernel JSON file")->required();
    check->add_option("-o,--output", out_path_raw, "write to a file instead of stdout");

    auto* catalog = app.add_subcommand("catalog", "emit a named catalog kernel");
    std::string twist_source = "0", twist_target = "0";
    catalog->add_option("--emit", opt.catalog_name, "kernel name");
    catalog->add_flag("--list", opt.catalog_list, "list the known names");
    catalog->add_option("-g,--genus", opt.catalog_params.genus, "genus of the source curve");
    catalog->add_option("--genus-target", opt.catalog_params.genus_target,
                        "genus of the target curve (defaults to the source genus)");
    catalog->add_option("--twist-source", twist_source,
                        "twist degree pulled back from the source (rational)");
    catalog->add_option("--twist-target", twist_target,
                        "twist degree pulled back from the target (rational)");
    catalog->add_option("-o,--output", out_path_raw, "write to a file instead of stdout");

    auto* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->add_option("--trials", opt.selftest_trials, "random draws per suite")
        ->check(CLI::Range(1, 1000000));
    selftest->add_option("--seed", opt.selftest_seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 uses its own exit codes; fold every usage problem into 1
        // (and keep 0 for --help).
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        for (auto* sub : {analyze, convolve, adjoint, check, catalog}) {
            if (sub->parsed() && sub->count("-o") > 0) opt.out_path = out_path_raw;
        }
        if (analyze->parsed()) opt.command = "analyze";
        if (convolve->parsed()) opt.command = "convolve";
        if (adjoint->parsed()) opt.command = "adjoint";
        if (check->parsed()) opt.command = "check";
        if (catalog->parsed()) {
            opt.command = "catalog";
            if (!opt.catalog_list && opt.catalog_name.empty())
                throw fmk::PreconditionError("catalog: pass --emit NAME or --list");
            opt.catalog_params.twist_source = fmk::parse_rational(twist_source);
            opt.catalog_params.twist_target = fmk::parse_rational(twist_target);
        }
        if (selftest->parsed()) opt.command = "selftest";
        return run(opt);
    } catch (const fmk::Error& e) {
        std::cerr << "fmk: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "fmk: unexpected error: " << e.what() << "\n";
        return kExitInputError;
    }
}
