#pragma once

#include "fmk/grr.hpp"
#include "fmk/lattice.hpp"

#include <utility>

namespace fmk {

// The two linear forms rank' = c_rr.r_f + c_rd.d_f, degree' = c_dr.r_f +
// c_dd.d_f describing the action of a kernel on (rank, degree).
struct KMapCoefficients {
    Rational rank_from_rank;
    Rational rank_from_degree;
    Rational degree_from_rank;
    Rational degree_from_degree;

    bool operator==(const KMapCoefficients&) const = default;
};

// The induced affine map on Pic_Q: a degree-m class with Jacobian part x
// goes to degree slope_degree*m + translation_degree with Jacobian part
// jac_linear(x) (the translation has no Jacobian component by convention:
// the kernel class only sees the numerical shadow of the base point).
struct AffinePicMap {
    Rational slope_degree;
    Rational translation_degree;
    JacHom jac_linear;

    std::pair<Rational, RatVec> apply(const Rational& degree, const RatVec& jac) const;

    bool operator==(const AffinePicMap&) const = default;
};

// Naive composition of affine maps: slopes multiply, translations chain,
// linear parts compose. (For maps coming from kernels this matches
// pic_map(convolve(..)) only on rank-one-preserving kernels; the Jacobian
// part always composes. See the functoriality notes in the tests.)
AffinePicMap compose(const AffinePicMap& q, const AffinePicMap& p);

struct TorelliReport {
    bool numerical_equivalence = false;
    bool jac_is_isomorphism = false;        // unimodular integral square matrix
    bool jac_preserves_polarization = false; // false when non-square/non-integral
    bool consistent = false; // numerical_equivalence == (iso && polarization)

    bool operator==(const TorelliReport&) const = default;
};

// -- action of a kernel -------------------------------------------------------

// Closed form of ch(q_!(p^* f . e)) decomposed on the target curve.
KClassCurve apply_k(const KernelClass& e, const KClassCurve& f);
// Same value computed by the Kunneth/GRR engine (kept as an independent
// route on purpose; tests compare the two).
KClassCurve apply_k_engine(const KernelClass& e, const KClassCurve& f);

KMapCoefficients k_map_coefficients(const KernelClass& e);

// The induced map H^1(C) -> H^1(C'), i.e. the rational Jacobian
// homomorphism. With gamma = M this is (J_g M)^T.
JacHom jac_map(const KernelClass& e);

AffinePicMap pic_map(const KernelClass& e);
AffinePicMap pic_map_engine(const KernelClass& e);

// -- kernel algebra -----------------------------------------------------------

KernelClass shift(const KernelClass& e);                      // [1]: negate the class
KernelClass dual(const KernelClass& e);                       // e^vee: negate c_1
KernelClass twist(const KernelClass& e, const Rational& df_source,
                  const Rational& df_target);                 // tensor by pullback bundles
KernelClass swap_kernel(const KernelClass& e);                // transport along the flip

// Kernel of the left / right adjoint functor:
//   left:  swap(e^vee . q^* K_{C'} [1]),   right: swap(e^vee . p^* K_C [1]).
KernelClass left_adjoint(const KernelClass& e);
KernelClass right_adjoint(const KernelClass& e);

// Kernel of the composite transform (e1 applied first):
//   push_{13}(pull_{12} e1 . pull_{23} e2 . Td of the middle factor).
KernelClass convolve(const KernelClass& e1, const KernelClass& e2);

// Both adjoints invert e up to the diagonal, on both sides, exactly.
bool is_numerical_equivalence(const KernelClass& e);

TorelliReport torelli_report(const KernelClass& e);

} // namespace fmk
