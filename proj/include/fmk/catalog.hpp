#pragma once

#include "fmk/fm.hpp"

#include <string>
#include <vector>

namespace fmk {

// Parameters for instantiating a named catalog kernel. genus_target < 0
// means "same as genus". The twist degrees only affect diagonal_twist.
struct CatalogParams {
    int genus = 1;
    int genus_target = -1;
    Rational twist_source = 0;
    Rational twist_target = 0;
};

struct CatalogEntry {
    std::string name;
    KernelClass kernel;
    bool is_equivalence = false; // ground truth for the Torelli checks
};

// Known names: diagonal, diagonal_twist, diagonal_shift, poincare (genus 1
// only), point_sheaf, zero. Throws PreconditionError for anything else or
// for inconsistent parameters.
CatalogEntry catalog_kernel(const std::string& name, const CatalogParams& params = {});

std::vector<std::string> catalog_names();

// The fixed instantiation exercised by the test suites. Non-equivalences are
// instantiated at genus >= 1: on a pair of genus-0 curves every Jacobian is
// trivial and the polarization checks hold vacuously, so the Torelli
// consistency flag has no content there.
std::vector<CatalogEntry> acceptance_catalog();

} // namespace fmk
