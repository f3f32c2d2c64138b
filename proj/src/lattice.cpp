#include "fmk/lattice.hpp"

#include "fmk/errors.hpp"

#include <utility>

namespace fmk {

SymplecticLattice SymplecticLattice::standard(int genus) {
    if (genus < 0) throw PreconditionError("negative genus");
    SymplecticLattice l;
    l.genus = genus;
    l.form = RatMat(2 * genus, 2 * genus);
    for (int i = 0; i < genus; ++i) {
        l.form.at(i, genus + i) = 1;
        l.form.at(genus + i, i) = -1;
    }
    return l;
}

SymplecticLattice SymplecticLattice::with_form(int genus, RatMat form) {
    if (genus < 0) throw PreconditionError("negative genus");
    if (form.rows() != 2 * genus || form.cols() != 2 * genus)
        throw PreconditionError("symplectic form must be 2g x 2g");
    if (!form.is_integral()) throw PreconditionError("symplectic form must be integral");
    if (form.transpose() != -form)
        throw PreconditionError("symplectic form must be antisymmetric");
    const Rational d = form.det();
    if (d != 1 && d != -1)
        throw PreconditionError("symplectic form must be unimodular");
    SymplecticLattice l;
    l.genus = genus;
    l.form = std::move(form);
    return l;
}

Rational SymplecticLattice::pair(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
        throw PreconditionError("vector length mismatch in symplectic pairing");
    const RatVec fy = form.apply(y);
    Rational acc(0);
    for (int i = 0; i < rank(); ++i) acc += x[static_cast<std::size_t>(i)] * fy[static_cast<std::size_t>(i)];
    return acc;
}

JacHom::JacHom(SymplecticLattice source_in, SymplecticLattice target_in, RatMat matrix_in)
    : source(std::move(source_in)), target(std::move(target_in)), matrix(std::move(matrix_in)) {
    if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
        throw PreconditionError("JacHom matrix must be (2*g_target) x (2*g_source)");
}

JacHom identity_hom(const SymplecticLattice& lattice) {
    return JacHom(lattice, lattice, RatMat::identity(lattice.rank()));
}

JacHom zero_hom(const SymplecticLattice& source, const SymplecticLattice& target) {
    return JacHom(source, target, RatMat(target.rank(), source.rank()));
}

JacHom compose(const JacHom& psi, const JacHom& phi) {
    if (phi.target != psi.source)
        throw PreconditionError("compose: middle lattices do not match");
    return JacHom(phi.source, psi.target, psi.matrix * phi.matrix);
}

JacHom dual_hom(const JacHom& phi) {
    // Standard forms are their own inverses up to sign; keep the general
    // formula so custom forms work too.
    const RatMat m = phi.source.form.inverse() * phi.matrix.transpose() * phi.target.form;
    return JacHom(phi.target, phi.source, m);
}

bool preserves_polarization(const JacHom& phi) {
    if (!phi.matrix.is_integral())
        throw PreconditionError("preserves_polarization requires an integral matrix");
    return phi.matrix.transpose() * phi.target.form * phi.matrix == phi.source.form;
}

bool is_unimodular_iso(const JacHom& phi) {
    if (!phi.matrix.is_square()) return false;
    if (!phi.matrix.is_integral()) return false;
    const Rational d = phi.matrix.det();
    return d == 1 || d == -1;
}

JacPoint::JacPoint(SymplecticLattice lattice_in, RatVec coords_in)
    : lattice(std::move(lattice_in)), coords(std::move(coords_in)) {
    if (static_cast<int>(coords.size()) != lattice.rank())
        throw PreconditionError("JacPoint needs 2g coordinates");
}

JacPoint JacPoint::reduced() const {
    RatVec r(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) r[i] = frac(coords[i]);
    return JacPoint(lattice, std::move(r));
}

bool JacPoint::operator==(const JacPoint& rhs) const {
    if (lattice != rhs.lattice) return false;
    return vec_is_integral(vec_sub(coords, rhs.coords));
}

JacPoint add(const JacPoint& x, const JacPoint& y) {
    if (x.lattice != y.lattice) throw PreconditionError("JacPoint add: lattice mismatch");
    return JacPoint(x.lattice, vec_add(x.coords, y.coords)).reduced();
}

JacPoint apply_point(const JacHom& phi, const JacPoint& x) {
    if (!phi.matrix.is_integral())
        throw PreconditionError("apply_point requires an integral matrix");
    if (phi.source != x.lattice) throw PreconditionError("apply_point: lattice mismatch");
    return JacPoint(phi.target, phi.matrix.apply(x.coords)).reduced();
}

} // namespace fmk
