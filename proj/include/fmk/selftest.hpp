#pragma once

#include "fmk/catalog.hpp"
#include "fmk/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fmk {

// -- random generators shared by selftest, the unit tests and the acceptance
//    runner. All draws are deterministic functions of the Rng state. --------

// Integral kernel with genera in [0, max_genus] and entries in [-span, span].
KernelClass random_kernel(Rng& rng, int max_genus = 3, int span = 3);
// Same, with both genera fixed.
KernelClass random_kernel_between(Rng& rng, int genus_source, int genus_target, int span = 3);
// Class on a genus-g curve; rank/degree integral, jac integral or
// half-integral.
KClassCurve random_kclass(Rng& rng, int genus, int span = 5);
// Random element of Sp(2g, Z) built from generators.
RatMat random_symplectic(Rng& rng, int genus, int steps = 6);
// Random class on the given product with a few random components.
CohClass random_coh_class(Rng& rng, const ProductSpace& space, int span = 3);
// Diagonal-type kernel whose Jacobian map is the given symplectic matrix;
// always a numerical equivalence for phi in Sp(2g, Z).
KernelClass equivalence_from_symplectic(const RatMat& phi, int genus);

// -- property suites ----------------------------------------------------------

struct SuiteResult {
    std::string name;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> messages; // first few failure descriptions

    bool ok() const { return failures == 0; }
    void expect(bool pass, const std::string& what);
};

struct SelftestReport {
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;

    bool ok() const;
    std::string render() const; // one line per suite plus a summary line
};

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kDefaultTrials = 100;

// Runs every property suite with `trials` random draws each.
SelftestReport run_selftest(int trials = kDefaultTrials, std::uint64_t seed = kDefaultSeed);

} // namespace fmk
