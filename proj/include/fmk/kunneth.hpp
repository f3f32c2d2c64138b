#pragma once

#include "fmk/matrix.hpp"

#include <map>
#include <vector>

namespace fmk {

// ---------------------------------------------------------------------------
// Rational cohomology of a product of 1..3 smooth projective curves, in its
// Kunneth grading. For a single genus-g curve the graded pieces are
//   H^0 = Q.1,  H^1 = Q^{2g} with basis a_1..a_g, b_1..b_g,  H^2 = Q.[pt],
// and on a product every class is a sum of components indexed by the tuple
// of per-factor degrees (d_1..d_n), d_i in {0,1,2}. A component carries one
// tensor axis per factor: the axis has length 2g_i when d_i = 1 and length 1
// otherwise (H^0 and H^2 are spanned by 1 and [pt]).
//
// Sign conventions, fixed once and used everywhere:
//  * cup of pure tensors follows the Koszul rule
//      (x_1x..xx_n) . (y_1x..xy_n)
//        = (-1)^{sum_{j<i} |x_i||y_j|} (x_1y_1)x..x(x_ny_n);
//  * within one slot, deg-1 times deg-1 contracts through the intersection
//    form: e_k . e_l = E(e_k, e_l)[pt] with E(x, y) = x^T J_g y and
//    J_g = [[0, I], [-I, 0]];
//  * pushforward along a projection integrates the dropped slots and is
//    sign-free on components whose dropped degrees are all exactly 2 (every
//    other component dies).
// ---------------------------------------------------------------------------

struct CurveSpec {
    int genus = 0;
    bool operator==(const CurveSpec&) const = default;
};

struct ProductSpace {
    std::vector<CurveSpec> factors; // 1 to 3 entries

    static ProductSpace of(const std::vector<int>& genera);

    int arity() const { return static_cast<int>(factors.size()); }
    int genus(int slot) const;
    int h1_rank(int slot) const { return 2 * genus(slot); }

    bool operator==(const ProductSpace&) const = default;
};

// Per-factor cohomological degrees of one Kunneth component.
using DegVec = std::vector<int>;

// Dense rational tensor with one axis per factor of the ambient product.
struct Tensor {
    std::vector<int> dims;
    std::vector<Rational> data; // row-major; empty axes make the tensor empty

    static Tensor zeros(const std::vector<int>& dims);

    std::size_t size() const { return data.size(); }
    bool is_zero() const;

    bool operator==(const Tensor&) const = default;
};

std::vector<int> component_dims(const ProductSpace& space, const DegVec& deg);

struct CohClass {
    ProductSpace space;
    // Canonical form: zero tensors are never stored.
    std::map<DegVec, Tensor> components;

    CohClass() = default;
    explicit CohClass(ProductSpace space_in) : space(std::move(space_in)) {}

    // Accumulates t into the component of multi-degree deg (validating the
    // shape), then re-canonicalizes.
    void add_component(const DegVec& deg, Tensor t);

    const Tensor* find(const DegVec& deg) const;
    // Single coefficient; idx must match the component's axis lengths.
    Rational coefficient(const DegVec& deg, const std::vector<int>& idx) const;

    bool is_zero() const { return components.empty(); }
    void normalize();

    bool operator==(const CohClass& rhs) const = default;
};

// -- constructors -----------------------------------------------------------

CohClass coh_zero(const ProductSpace& space);
CohClass coh_unit(const ProductSpace& space);
// [pt] in the given slot, 1 everywhere else.
CohClass coh_point(const ProductSpace& space, int slot);
// [pt] in every slot (the class of a point of the product).
CohClass coh_top(const ProductSpace& space);
// Basis vector e_index of H^1 in the given slot.
CohClass coh_h1(const ProductSpace& space, int slot, int index);
// Arbitrary H^1 vector in the given slot.
CohClass coh_h1_vec(const ProductSpace& space, int slot, const RatVec& v);

// -- linear structure and products -------------------------------------------

CohClass operator+(const CohClass& x, const CohClass& y);
CohClass operator-(const CohClass& x, const CohClass& y);
CohClass operator-(const CohClass& x);
CohClass scale(const Rational& c, const CohClass& x);

CohClass cup(const CohClass& x, const CohClass& y);

// -- functoriality ------------------------------------------------------------

// Pullback along the projection target -> x.space that keeps the listed
// slots (strictly increasing, genera must match): inserts degree-0 slots.
CohClass pullback(const ProductSpace& target, const std::vector<int>& image_slots,
                  const CohClass& x);

// Pushforward along the projection x.space -> kept slots: integrates every
// dropped slot, keeping only components of dropped degree exactly 2.
CohClass pushforward(const CohClass& x, const std::vector<int>& keep_slots);

// The factor swap of a 2-fold product, with its Koszul sign
// (on H^1 x H^1 components the matrix goes to -M^T).
CohClass swap_factors(const CohClass& x);

// -- distinguished classes and helpers ----------------------------------------

// Class of the diagonal in C x C for a genus-g curve:
//   [Delta] = A + B + Gamma,  Gamma = sum J^{-1}_{ik} e_i x e_k.
CohClass diagonal_class(int genus);

// For x on a 2-fold product: the matrix of w |-> push_2(pull_1(w) . x) on
// H^1, i.e. the Jacobian-level action of the correspondence x. With M the
// (1,1) coefficient matrix this is (J_g M)^T.
RatMat correspondence_action(const CohClass& x);

// Multiplicative inverse of a class with nonzero scalar term (Neumann series;
// the augmentation-trivial part is nilpotent).
CohClass inverse_of_unit(const CohClass& x);

// Product over the dropped slots of (1 - (g_i - 1)[pt_i]): the Todd class of
// the relative tangent bundle of the projection onto keep_slots. keep_slots
// may be empty, giving the Todd class of the whole product.
CohClass relative_todd(const ProductSpace& space, const std::vector<int>& keep_slots);

Rational scalar_part(const CohClass& x);
Rational top_part(const CohClass& x);

} // namespace fmk
