#pragma once

#include "fmk/kunneth.hpp"

namespace fmk {

// Numerical K-theory class of an object on a single curve: its Chern
// character is rank + degree.[pt] + (Jacobian part in H^1). There is no ch_2
// on a curve.
struct KClassCurve {
    CurveSpec curve;
    Rational rank;
    Rational degree;
    RatVec jac; // 2g coordinates in H^1

    KClassCurve() = default;
    KClassCurve(CurveSpec curve, Rational rank, Rational degree, RatVec jac);

    bool operator==(const KClassCurve&) const = default;
};

CohClass chern_character_curve(const KClassCurve& f);
KClassCurve curve_class_from_coh(const CohClass& x);

// Numerical kernel on C x C': determined by
//   ch = rank + a.A + b.B + sum_{ik} gamma_{ik} e_i x e'_k + ch2.[pt],
// with A = [pt_C x C'], B = [C x pt_C'] and e_i, e'_k the H^1 bases.
struct KernelClass {
    int genus_source = 0;
    int genus_target = 0;
    Rational rank;
    Rational a;    // coefficient of A
    Rational b;    // coefficient of B
    RatMat gamma;  // 2g x 2g' Kunneth coefficients of the H^1 x H^1 part
    Rational ch2;  // coefficient of [pt]

    KernelClass() = default;
    KernelClass(int genus_source, int genus_target, Rational rank, Rational a, Rational b,
                RatMat gamma, Rational ch2);

    ProductSpace space() const { return ProductSpace::of({genus_source, genus_target}); }
    bool is_integral() const;

    bool operator==(const KernelClass&) const = default;
};

CohClass kernel_to_coh(const KernelClass& e);
// Inverse of kernel_to_coh; throws MathError when the class has components
// outside the kernel shape (odd Kunneth degrees other than (1,1)).
KernelClass coh_to_kernel(const CohClass& x);

// Grothendieck-Riemann-Roch pushforward along the projection onto
// keep_slots: x |-> push(x . Td(relative tangent)). Applied to a Chern
// character, this is the Chern character of the derived pushforward.
CohClass grr_push(const CohClass& x, const std::vector<int>& keep_slots);

// Chern character of the structure sheaf of the diagonal in C x C, computed
// by Riemann-Roch for the closed immersion:
//   ch(O_Delta) = Delta_*(Td T_C) . Td(T_{CxC})^{-1}
//              = (0, 1, 1, J^{-1}, g - 1).
KernelClass diagonal_kernel(int genus);

} // namespace fmk
