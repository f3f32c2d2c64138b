#include "fmk/grr.hpp"

#include "fmk/errors.hpp"

#include <utility>

namespace fmk {

KClassCurve::KClassCurve(CurveSpec curve_in, Rational rank_in, Rational degree_in, RatVec jac_in)
    : curve(curve_in), rank(std::move(rank_in)), degree(std::move(degree_in)),
      jac(std::move(jac_in)) {
    if (static_cast<int>(jac.size()) != 2 * curve.genus)
        throw PreconditionError("KClassCurve jac part needs 2g coordinates");
}

CohClass chern_character_curve(const KClassCurve& f) {
    const ProductSpace s = ProductSpace::of({f.curve.genus});
    CohClass x = scale(f.rank, coh_unit(s)) + scale(f.degree, coh_point(s, 0));
    if (f.curve.genus > 0) x = x + coh_h1_vec(s, 0, f.jac);
    return x;
}

KClassCurve curve_class_from_coh(const CohClass& x) {
    if (x.space.arity() != 1)
        throw PreconditionError("curve_class_from_coh needs a 1-fold product");
    const int g = x.space.genus(0);
    RatVec jac(static_cast<std::size_t>(2 * g), Rational(0));
    if (const Tensor* t = x.find({1})) jac = t->data;
    return KClassCurve(CurveSpec{g}, scalar_part(x), top_part(x), std::move(jac));
}

KernelClass::KernelClass(int genus_source_in, int genus_target_in, Rational rank_in,
                         Rational a_in, Rational b_in, RatMat gamma_in, Rational ch2_in)
    : genus_source(genus_source_in), genus_target(genus_target_in), rank(std::move(rank_in)),
      a(std::move(a_in)), b(std::move(b_in)), gamma(std::move(gamma_in)), ch2(std::move(ch2_in)) {
    if (genus_source < 0 || genus_target < 0) throw PreconditionError("negative genus");
    if (gamma.rows() != 2 * genus_source || gamma.cols() != 2 * genus_target)
        throw PreconditionError("kernel gamma must be 2g x 2g'");
}

bool KernelClass::is_integral() const {
    return is_integer(rank) && is_integer(a) && is_integer(b) && is_integer(ch2) &&
           gamma.is_integral();
}

CohClass kernel_to_coh(const KernelClass& e) {
    const ProductSpace s = e.space();
    CohClass x = scale(e.rank, coh_unit(s)) + scale(e.a, coh_point(s, 0)) +
                 scale(e.b, coh_point(s, 1)) + scale(e.ch2, coh_top(s));
    if (!e.gamma.is_zero()) {
        Tensor t = Tensor::zeros(component_dims(s, {1, 1}));
        for (int i = 0; i < e.gamma.rows(); ++i)
            for (int k = 0; k < e.gamma.cols(); ++k)
                t.data[static_cast<std::size_t>(i) * static_cast<std::size_t>(e.gamma.cols()) +
                       static_cast<std::size_t>(k)] = e.gamma.at(i, k);
        x.add_component({1, 1}, std::move(t));
    }
    return x;
}

KernelClass coh_to_kernel(const CohClass& x) {
    if (x.space.arity() != 2) throw PreconditionError("coh_to_kernel needs a 2-fold product");
    for (const auto& [deg, t] : x.components) {
        const bool kernel_shaped = deg == DegVec{0, 0} || deg == DegVec{2, 0} ||
                                   deg == DegVec{0, 2} || deg == DegVec{1, 1} ||
                                   deg == DegVec{2, 2};
        if (!kernel_shaped)
            throw MathError("class is not kernel-shaped: nonzero component of degree (" +
                            std::to_string(deg[0]) + ", " + std::to_string(deg[1]) + ")");
    }
    const int g = x.space.genus(0);
    const int gp = x.space.genus(1);
    RatMat gamma(2 * g, 2 * gp);
    if (const Tensor* t = x.find({1, 1})) {
        for (int i = 0; i < 2 * g; ++i)
            for (int k = 0; k < 2 * gp; ++k)
                gamma.at(i, k) = t->data[static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * gp) +
                                         static_cast<std::size_t>(k)];
    }
    return KernelClass(g, gp, scalar_part(x), x.coefficient({2, 0}, {0, 0}),
                       x.coefficient({0, 2}, {0, 0}), std::move(gamma),
                       x.coefficient({2, 2}, {0, 0}));
}

CohClass grr_push(const CohClass& x, const std::vector<int>& keep_slots) {
    return pushforward(cup(x, relative_todd(x.space, keep_slots)), keep_slots);
}

KernelClass diagonal_kernel(int genus) {
    const ProductSpace s = ProductSpace::of({genus, genus});
    // Delta_*(Td T_C) = [Delta] - (g - 1)[pt].
    const CohClass pushed_todd =
        diagonal_class(genus) - scale(Rational(genus - 1), coh_top(s));
    const CohClass ambient_todd = relative_todd(s, {});
    return coh_to_kernel(cup(pushed_todd, inverse_of_unit(ambient_todd)));
}

} // namespace fmk
