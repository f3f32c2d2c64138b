#pragma once

#include "fmk/fm.hpp"

#include <string>

namespace fmk {

// Everything `analyze` computes about one kernel.
struct AnalysisReport {
    KernelClass kernel;
    KMapCoefficients kmap;
    AffinePicMap pic;
    TorelliReport torelli;
};

AnalysisReport analyze_kernel(const KernelClass& e);

// Canonical JSON bytes (sorted keys, two-space indent, trailing newline).
std::string report_to_json(const AnalysisReport& r);

// Human-readable rendering.
std::string report_to_text(const AnalysisReport& r);

} // namespace fmk
