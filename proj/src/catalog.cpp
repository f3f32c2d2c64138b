#include "fmk/catalog.hpp"

#include "fmk/errors.hpp"

namespace fmk {

namespace {

void require_same_genera(const std::string& name, const CatalogParams& p) {
    if (p.genus_target >= 0 && p.genus_target != p.genus)
        throw PreconditionError("catalog kernel '" + name + "' lives on C x C; "
                                "genus_target must match genus");
}

void require_no_twists(const std::string& name, const CatalogParams& p) {
    if (p.twist_source != 0 || p.twist_target != 0)
        throw PreconditionError("catalog kernel '" + name + "' takes no twist degrees");
}

} // namespace

CatalogEntry catalog_kernel(const std::string& name, const CatalogParams& params) {
    if (params.genus < 0 || params.genus_target < -1)
        throw PreconditionError("invalid catalog genus");
    const int g = params.genus;
    const int gt = params.genus_target < 0 ? g : params.genus_target;

    if (name == "diagonal") {
        require_same_genera(name, params);
        require_no_twists(name, params);
        return CatalogEntry{name, diagonal_kernel(g), true};
    }
    if (name == "diagonal_twist") {
        require_same_genera(name, params);
        return CatalogEntry{
            name, twist(diagonal_kernel(g), params.twist_source, params.twist_target), true};
    }
    if (name == "diagonal_shift") {
        require_same_genera(name, params);
        require_no_twists(name, params);
        return CatalogEntry{name, shift(diagonal_kernel(g)), true};
    }
    if (name == "poincare") {
        require_same_genera(name, params);
        require_no_twists(name, params);
        if (g != 1)
            throw PreconditionError("the poincare catalog kernel requires genus 1");
        // Normalized Poincare bundle on E x E: rank 1, c_1 = Gamma_Delta,
        // ch_2 = -[pt].
        const KernelClass diag = diagonal_kernel(1);
        return CatalogEntry{name, KernelClass(1, 1, 1, 0, 0, diag.gamma, -1), true};
    }
    if (name == "point_sheaf") {
        require_no_twists(name, params);
        // O_{{p} x C'}: the class of the fiber {p} x C'.
        return CatalogEntry{
            name, KernelClass(g, gt, 0, 1, 0, RatMat(2 * g, 2 * gt), 0), false};
    }
    if (name == "zero") {
        require_no_twists(name, params);
        return CatalogEntry{name, KernelClass(g, gt, 0, 0, 0, RatMat(2 * g, 2 * gt), 0), false};
    }
    throw PreconditionError("unknown catalog kernel '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"diagonal", "diagonal_twist", "diagonal_shift", "poincare", "point_sheaf", "zero"};
}

std::vector<CatalogEntry> acceptance_catalog() {
    std::vector<CatalogEntry> entries;
    for (int g : {0, 1, 2, 3}) entries.push_back(catalog_kernel("diagonal", {.genus = g}));
    entries.push_back(
        catalog_kernel("diagonal_twist", {.genus = 1, .twist_source = 2, .twist_target = 3}));
    entries.push_back(catalog_kernel(
        "diagonal_twist", {.genus = 2, .twist_source = -1, .twist_target = Rational(1) / 2}));
    entries.push_back(catalog_kernel("diagonal_shift", {.genus = 0}));
    entries.push_back(catalog_kernel("diagonal_shift", {.genus = 2}));
    entries.push_back(catalog_kernel("poincare", {.genus = 1}));
    entries.push_back(catalog_kernel("point_sheaf", {.genus = 1, .genus_target = 2}));
    entries.push_back(catalog_kernel("point_sheaf", {.genus = 2, .genus_target = 2}));
    entries.push_back(catalog_kernel("zero", {.genus = 1, .genus_target = 1}));
    entries.push_back(catalog_kernel("zero", {.genus = 3, .genus_target = 1}));
    return entries;
}

} // namespace fmk
