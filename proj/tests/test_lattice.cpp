#include "fmk/errors.hpp"
#include "fmk/lattice.hpp"

#include "doctest.h"

using namespace fmk;

namespace {

RatMat from_rows(const std::vector<std::vector<int>>& rows) {
    RatMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

RatVec vec(const std::vector<int>& entries) {
    RatVec v(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
    return v;
}

} // namespace

TEST_CASE("standard lattice and pairing") {
    const SymplecticLattice l = SymplecticLattice::standard(2);
    CHECK(l.rank() == 4);
    CHECK(l.form == from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}));
    // E(a_i, b_i) = 1, E(b_i, a_i) = -1, all other basis pairs zero.
    CHECK(l.pair(vec({1, 0, 0, 0}), vec({0, 0, 1, 0})) == 1);
    CHECK(l.pair(vec({0, 0, 1, 0}), vec({1, 0, 0, 0})) == -1);
    CHECK(l.pair(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})) == 0);
    CHECK(l.pair(vec({1, 0, 0, 0}), vec({1, 0, 0, 0})) == 0);
    CHECK(SymplecticLattice::standard(0).rank() == 0);
    CHECK_THROWS_AS(SymplecticLattice::standard(-1), PreconditionError);
}

TEST_CASE("with_form validates the Gram matrix") {
    CHECK(SymplecticLattice::with_form(1, from_rows({{0, 1}, {-1, 0}})).genus == 1);
    // wrong shape
    CHECK_THROWS_AS(SymplecticLattice::with_form(1, RatMat::identity(3)), PreconditionError);
    // not antisymmetric
    CHECK_THROWS_AS(SymplecticLattice::with_form(1, RatMat::identity(2)), PreconditionError);
    // degenerate (det 0)
    CHECK_THROWS_AS(SymplecticLattice::with_form(1, RatMat(2, 2)), PreconditionError);
    // antisymmetric but not unimodular
    CHECK_THROWS_AS(SymplecticLattice::with_form(1, from_rows({{0, 2}, {-2, 0}})), PreconditionError);
    // not integral
    RatMat half(2, 2);
    half.at(0, 1) = Rational(1) / 2;
    half.at(1, 0) = Rational(-1) / 2;
    CHECK_THROWS_AS(SymplecticLattice::with_form(1, half), PreconditionError);
}

TEST_CASE("hom construction and composition") {
    const SymplecticLattice g1 = SymplecticLattice::standard(1);
    const SymplecticLattice g2 = SymplecticLattice::standard(2);
    CHECK_THROWS_AS(JacHom(g1, g2, RatMat::identity(2)), PreconditionError);
    const JacHom f(g1, g2, RatMat(4, 2));
    const JacHom g(g2, g1, RatMat(2, 4));
    CHECK(compose(g, f) == zero_hom(g1, g1));
    CHECK_THROWS_AS(compose(f, f), PreconditionError);
    CHECK(compose(identity_hom(g2), f) == f);
    CHECK(compose(f, identity_hom(g1)) == f);
}

TEST_CASE("dual hom on a genus-1 example") {
    const SymplecticLattice g1 = SymplecticLattice::standard(1);
    // For the standard form, dual_hom is J^-1 phi^T J = adj(phi) in 2x2:
    // [[a, b], [c, d]] -> [[d, -b], [-c, a]].
    const JacHom phi(g1, g1, from_rows({{1, 1}, {0, 1}}));
    CHECK(dual_hom(phi).matrix == from_rows({{1, -1}, {0, 1}}));
    // phi composed with its dual is multiplication by det(phi).
    CHECK(compose(phi, dual_hom(phi)).matrix == RatMat::identity(2));
    // Duality is an anti-homomorphism and an involution.
    const JacHom psi(g1, g1, from_rows({{2, 1}, {1, 1}}));
    CHECK(dual_hom(compose(psi, phi)) == compose(dual_hom(phi), dual_hom(psi)));
    CHECK(dual_hom(dual_hom(psi)) == psi);
    // Defining property: E(phi x, y) = E(x, dual_hom(phi) y).
    const RatVec x = vec({1, 2});
    const RatVec y = vec({3, -1});
    CHECK(g1.pair(phi.matrix.apply(x), y) == g1.pair(x, dual_hom(phi).matrix.apply(y)));
}

TEST_CASE("polarization and unimodularity predicates") {
    const SymplecticLattice g0 = SymplecticLattice::standard(0);
    const SymplecticLattice g1 = SymplecticLattice::standard(1);
    // The empty map between genus-0 lattices is a unimodular iso.
    CHECK(is_unimodular_iso(identity_hom(g0)));
    CHECK(preserves_polarization(identity_hom(g0)));
    CHECK(is_unimodular_iso(identity_hom(g1)));
    CHECK(preserves_polarization(identity_hom(g1)));
    // SL_2(Z) = Sp_2(Z): any determinant-1 integral 2x2 matrix preserves J.
    const JacHom shear(g1, g1, from_rows({{1, 5}, {0, 1}}));
    CHECK(is_unimodular_iso(shear));
    CHECK(preserves_polarization(shear));
    // Determinant -1 is unimodular but flips the form.
    const JacHom flip(g1, g1, from_rows({{0, 1}, {1, 0}}));
    CHECK(is_unimodular_iso(flip));
    CHECK_FALSE(preserves_polarization(flip));
    // Multiplication by 2: integral, injective, not unimodular; scales the
    // form by 4.
    const JacHom doubling(g1, g1, from_rows({{2, 0}, {0, 2}}));
    CHECK_FALSE(is_unimodular_iso(doubling));
    CHECK_FALSE(preserves_polarization(doubling));
    // Non-integral matrices are not isos; the polarization predicate insists
    // on integrality outright (the report layer does the gating).
    RatMat half = RatMat::identity(2);
    half.at(0, 0) = Rational(1) / 2;
    half.at(1, 1) = 2;
    CHECK_FALSE(is_unimodular_iso(JacHom(g1, g1, half)));
    CHECK_THROWS_AS(preserves_polarization(JacHom(g1, g1, half)), PreconditionError);
    // Non-square maps are never isos.
    CHECK_FALSE(is_unimodular_iso(zero_hom(g1, SymplecticLattice::standard(2))));
}

TEST_CASE("torus points reduce modulo the lattice") {
    const SymplecticLattice g1 = SymplecticLattice::standard(1);
    RatVec c(2);
    c[0] = Rational(7) / 2;
    c[1] = Rational(-1) / 3;
    const JacPoint p(g1, c);
    const JacPoint r = p.reduced();
    CHECK(r.coords[0] == Rational(1) / 2);
    CHECK(r.coords[1] == Rational(2) / 3);
    CHECK(p == r);
    CHECK_FALSE(p == JacPoint(g1, RatVec(2)));
    // Group law.
    CHECK(add(p, p).coords[1] == Rational(1) / 3);
    CHECK_THROWS_AS(JacPoint(g1, RatVec(3)), PreconditionError);
}

TEST_CASE("homs act on torus points") {
    const SymplecticLattice g1 = SymplecticLattice::standard(1);
    const JacHom phi(g1, g1, from_rows({{1, 1}, {0, 1}}));
    RatVec c(2);
    c[0] = Rational(1) / 2;
    c[1] = Rational(2) / 3;
    const JacPoint p(g1, c);
    const JacPoint q = apply_point(phi, p);
    CHECK(q.coords[0] == Rational(1) / 6); // 1/2 + 2/3 = 7/6 = 1/6 mod 1
    CHECK(q.coords[1] == Rational(2) / 3);
    // Additivity on the torus.
    CHECK(apply_point(phi, add(p, p)) == add(q, q));
    // Rational matrices do not descend to the torus.
    RatMat half(2, 2);
    half.at(0, 0) = Rational(1) / 2;
    CHECK_THROWS_AS(apply_point(JacHom(g1, g1, half), p), PreconditionError);
}
