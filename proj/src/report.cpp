#include "fmk/report.hpp"

#include "fmk/kernel_io.hpp"
#include "json_util.hpp"

#include <sstream>

namespace fmk {

AnalysisReport analyze_kernel(const KernelClass& e) {
    AnalysisReport r;
    r.kernel = e;
    r.kmap = k_map_coefficients(e);
    r.pic = pic_map(e);
    r.torelli = torelli_report(e);
    return r;
}

std::string report_to_json(const AnalysisReport& r) {
    nlohmann::json j;
    // The kernel is echoed in its canonical wire form.
    j["kernel"] = nlohmann::json::parse(emit_kernel_json(r.kernel));
    j["kmap"] = {
        {"rank", {{"r_f", detail::rational_to_json(r.kmap.rank_from_rank)},
                  {"d_f", detail::rational_to_json(r.kmap.rank_from_degree)}}},
        {"degree", {{"r_f", detail::rational_to_json(r.kmap.degree_from_rank)},
                    {"d_f", detail::rational_to_json(r.kmap.degree_from_degree)}}},
    };
    j["pic"] = {
        {"slope_degree", detail::rational_to_json(r.pic.slope_degree)},
        {"translation_degree", detail::rational_to_json(r.pic.translation_degree)},
    };
    j["jac_matrix"] = detail::matrix_to_json(r.pic.jac_linear.matrix);
    j["flags"] = {
        {"numerical_equivalence", r.torelli.numerical_equivalence},
        {"jac_unimodular_iso", r.torelli.jac_is_isomorphism},
        {"jac_preserves_polarization", r.torelli.jac_preserves_polarization},
        {"consistent", r.torelli.consistent},
    };
    return detail::dump_canonical(j);
}

namespace {

const char* yn(bool v) { return v ? "yes" : "no"; }

} // namespace

std::string report_to_text(const AnalysisReport& r) {
    const KernelClass& e = r.kernel;
    std::ostringstream out;
    out << "kernel on C x C'        genus " << e.genus_source << " -> " << e.genus_target
        << "\n";
    out << "  rank                  " << to_string(e.rank) << "\n";
    out << "  a (fiber deg over C)  " << to_string(e.a) << "\n";
    out << "  b (fiber deg over C') " << to_string(e.b) << "\n";
    out << "  ch2                   " << to_string(e.ch2) << "\n";
    out << "k-map                   rank' = " << to_string(r.kmap.rank_from_rank)
        << "*r_f + " << to_string(r.kmap.rank_from_degree) << "*d_f\n";
    out << "                        degree' = " << to_string(r.kmap.degree_from_rank)
        << "*r_f + " << to_string(r.kmap.degree_from_degree) << "*d_f\n";
    out << "pic map                 m -> " << to_string(r.pic.slope_degree) << "*m + "
        << to_string(r.pic.translation_degree) << "\n";
    out << "jac matrix              " << to_string(r.pic.jac_linear.matrix) << "\n";
    out << "numerical equivalence   " << yn(r.torelli.numerical_equivalence) << "\n";
    out << "jac unimodular iso      " << yn(r.torelli.jac_is_isomorphism) << "\n";
    out << "preserves polarization  " << yn(r.torelli.jac_preserves_polarization) << "\n";
    out << "consistent              " << yn(r.torelli.consistent) << "\n";
    return out.str();
}

} // namespace fmk
