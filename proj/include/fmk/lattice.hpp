#pragma once

#include "fmk/matrix.hpp"

namespace fmk {

// H^1(C, Z) of a genus-g curve with its intersection pairing: a free
// Z-module of rank 2g carrying a unimodular alternating form. The standard
// basis a_1..a_g, b_1..b_g has Gram matrix J_g = [[0, I], [-I, 0]], and the
// form is evaluated as E(x, y) = x^T J y.
struct SymplecticLattice {
    int genus = 0;
    RatMat form; // 2g x 2g, integral, antisymmetric, det = 1

    static SymplecticLattice standard(int genus);
    // Custom Gram matrix; validates shape, integrality, antisymmetry and
    // |det| = 1.
    static SymplecticLattice with_form(int genus, RatMat form);

    int rank() const { return 2 * genus; }
    Rational pair(const RatVec& x, const RatVec& y) const;

    bool operator==(const SymplecticLattice& rhs) const = default;
};

// A homomorphism of (rationalized) lattices, source -> target, stored as a
// (2*g_target) x (2*g_source) matrix acting on column vectors.
struct JacHom {
    SymplecticLattice source;
    SymplecticLattice target;
    RatMat matrix;

    JacHom() = default;
    JacHom(SymplecticLattice source, SymplecticLattice target, RatMat matrix);

    bool operator==(const JacHom& rhs) const = default;
};

JacHom identity_hom(const SymplecticLattice& lattice);
JacHom zero_hom(const SymplecticLattice& source, const SymplecticLattice& target);

// psi after phi. Requires phi.target == psi.source.
JacHom compose(const JacHom& psi, const JacHom& phi);

// The dual isogeny on homology: dual_hom(phi) = S_source^-1 phi^T S_target,
// the adjoint of phi with respect to the two forms
// (E_target(phi x, y) = E_source(x, dual_hom(phi) y)).
JacHom dual_hom(const JacHom& phi);

// Whether phi pulls the target polarization form back to the source form:
// phi^T S_target phi == S_source. Requires an integral matrix.
bool preserves_polarization(const JacHom& phi);

// Integral, square, determinant +-1: an isomorphism of the underlying
// Z-modules. The empty 0x0 matrix counts (genus 0 on both sides).
bool is_unimodular_iso(const JacHom& phi);

// A point of the rational torus H^1(C, Q)/H^1(C, Z): coordinates matter
// only modulo 1.
struct JacPoint {
    SymplecticLattice lattice;
    RatVec coords;

    JacPoint() = default;
    JacPoint(SymplecticLattice lattice, RatVec coords);

    // Representative with all coordinates in [0, 1).
    JacPoint reduced() const;

    // Equality in the torus group: coordinate-wise difference integral.
    bool operator==(const JacPoint& rhs) const;
};

JacPoint add(const JacPoint& x, const JacPoint& y);

// phi applied to a torus point; requires an integral matrix (a rational
// matrix does not descend to the torus). Result is reduced to [0, 1).
JacPoint apply_point(const JacHom& phi, const JacPoint& x);

} // namespace fmk
