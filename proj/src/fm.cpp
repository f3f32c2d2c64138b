#include "fmk/fm.hpp"

#include "fmk/errors.hpp"

namespace fmk {

std::pair<Rational, RatVec> AffinePicMap::apply(const Rational& degree, const RatVec& jac) const {
    return {slope_degree * degree + translation_degree, jac_linear.matrix.apply(jac)};
}

AffinePicMap compose(const AffinePicMap& q, const AffinePicMap& p) {
    return AffinePicMap{q.slope_degree * p.slope_degree,
                        q.slope_degree * p.translation_degree + q.translation_degree,
                        compose(q.jac_linear, p.jac_linear)};
}

KClassCurve apply_k(const KernelClass& e, const KClassCurve& f) {
    if (f.curve.genus != e.genus_source)
        throw PreconditionError("apply_k: class lives on the wrong curve");
    const Rational gm1 = e.genus_source - 1;
    const Rational rank = e.a * f.rank + e.rank * f.degree - gm1 * e.rank * f.rank;
    const Rational degree = e.ch2 * f.rank + e.b * f.degree - gm1 * e.b * f.rank;
    return KClassCurve(CurveSpec{e.genus_target}, rank, degree,
                       jac_map(e).matrix.apply(f.jac));
}

KClassCurve apply_k_engine(const KernelClass& e, const KClassCurve& f) {
    if (f.curve.genus != e.genus_source)
        throw PreconditionError("apply_k: class lives on the wrong curve");
    const ProductSpace s = e.space();
    const CohClass pulled = pullback(s, {0}, chern_character_curve(f));
    return curve_class_from_coh(grr_push(cup(pulled, kernel_to_coh(e)), {1}));
}

KMapCoefficients k_map_coefficients(const KernelClass& e) {
    const Rational gm1 = e.genus_source - 1;
    return KMapCoefficients{e.a - gm1 * e.rank, e.rank, e.ch2 - gm1 * e.b, e.b};
}

JacHom jac_map(const KernelClass& e) {
    return JacHom(SymplecticLattice::standard(e.genus_source),
                  SymplecticLattice::standard(e.genus_target),
                  correspondence_action(kernel_to_coh(e)));
}

AffinePicMap pic_map(const KernelClass& e) {
    const Rational gm1 = e.genus_source - 1;
    return AffinePicMap{e.b, e.ch2 - gm1 * e.b, jac_map(e)};
}

AffinePicMap pic_map_engine(const KernelClass& e) {
    // Push two probe line bundles through the engine: degree 0 gives the
    // translation, degree 1 adds one slope.
    const KClassCurve probe0(CurveSpec{e.genus_source}, 1, 0,
                             RatVec(static_cast<std::size_t>(2 * e.genus_source), Rational(0)));
    KClassCurve probe1 = probe0;
    probe1.degree = 1;
    const Rational t = apply_k_engine(e, probe0).degree;
    const Rational slope = apply_k_engine(e, probe1).degree - t;
    return AffinePicMap{slope, t,
                        JacHom(SymplecticLattice::standard(e.genus_source),
                               SymplecticLattice::standard(e.genus_target),
                               correspondence_action(kernel_to_coh(e)))};
}

KernelClass shift(const KernelClass& e) {
    return KernelClass(e.genus_source, e.genus_target, -e.rank, -e.a, -e.b, -e.gamma, -e.ch2);
}

KernelClass dual(const KernelClass& e) {
    return KernelClass(e.genus_source, e.genus_target, e.rank, -e.a, -e.b, -e.gamma, e.ch2);
}

KernelClass twist(const KernelClass& e, const Rational& df_source, const Rational& df_target) {
    return KernelClass(e.genus_source, e.genus_target, e.rank, e.a + e.rank * df_source,
                       e.b + e.rank * df_target, e.gamma,
                       e.ch2 + e.a * df_target + e.b * df_source +
                           e.rank * df_source * df_target);
}

KernelClass swap_kernel(const KernelClass& e) {
    return coh_to_kernel(swap_factors(kernel_to_coh(e)));
}

KernelClass left_adjoint(const KernelClass& e) {
    return swap_kernel(shift(twist(dual(e), 0, 2 * e.genus_target - 2)));
}

KernelClass right_adjoint(const KernelClass& e) {
    return swap_kernel(shift(twist(dual(e), 2 * e.genus_source - 2, 0)));
}

KernelClass convolve(const KernelClass& e1, const KernelClass& e2) {
    if (e1.genus_target != e2.genus_source)
        throw PreconditionError("convolve: kernels are not composable");
    const ProductSpace triple =
        ProductSpace::of({e1.genus_source, e1.genus_target, e2.genus_target});
    const CohClass x1 = pullback(triple, {0, 1}, kernel_to_coh(e1));
    const CohClass x2 = pullback(triple, {1, 2}, kernel_to_coh(e2));
    return coh_to_kernel(grr_push(cup(x1, x2), {0, 2}));
}

bool is_numerical_equivalence(const KernelClass& e) {
    const KernelClass diag_src = diagonal_kernel(e.genus_source);
    const KernelClass diag_tgt = diagonal_kernel(e.genus_target);
    const KernelClass el = left_adjoint(e);
    const KernelClass er = right_adjoint(e);
    return convolve(e, el) == diag_src && convolve(el, e) == diag_tgt &&
           convolve(e, er) == diag_src && convolve(er, e) == diag_tgt;
}

TorelliReport torelli_report(const KernelClass& e) {
    TorelliReport r;
    r.numerical_equivalence = is_numerical_equivalence(e);
    const JacHom phi = jac_map(e);
    r.jac_is_isomorphism = is_unimodular_iso(phi);
    r.jac_preserves_polarization =
        phi.matrix.is_square() && phi.matrix.is_integral() && preserves_polarization(phi);
    r.consistent =
        r.numerical_equivalence == (r.jac_is_isomorphism && r.jac_preserves_polarization);
    return r;
}

} // namespace fmk
