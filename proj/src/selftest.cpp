#include "fmk/selftest.hpp"

#include "fmk/errors.hpp"
#include "fmk/kernel_io.hpp"

#include <iomanip>
#include <sstream>

namespace fmk {

// -- generators ---------------------------------------------------------------

KernelClass random_kernel_between(Rng& rng, int genus_source, int genus_target, int span) {
    RatMat gamma(2 * genus_source, 2 * genus_target);
    for (int i = 0; i < gamma.rows(); ++i)
        for (int j = 0; j < gamma.cols(); ++j) gamma.at(i, j) = rng.int_in(-span, span);
    return KernelClass(genus_source, genus_target, rng.int_in(-span, span),
                       rng.int_in(-span, span), rng.int_in(-span, span), std::move(gamma),
                       rng.int_in(-span, span));
}

KernelClass random_kernel(Rng& rng, int max_genus, int span) {
    const int gs = static_cast<int>(rng.int_in(0, max_genus));
    const int gt = static_cast<int>(rng.int_in(0, max_genus));
    return random_kernel_between(rng, gs, gt, span);
}

KClassCurve random_kclass(Rng& rng, int genus, int span) {
    RatVec jac(static_cast<std::size_t>(2 * genus));
    for (auto& v : jac) v = rng.rational_in(-span, span);
    return KClassCurve(CurveSpec{genus}, rng.int_in(-span, span), rng.int_in(-span, span),
                       std::move(jac));
}

RatMat random_symplectic(Rng& rng, int genus, int steps) {
    const int g = genus;
    const int n = 2 * g;
    RatMat m = RatMat::identity(n);
    if (g == 0) return m;
    const RatMat j_form = SymplecticLattice::standard(g).form;
    for (int step = 0; step < steps; ++step) {
        RatMat gen = RatMat::identity(n);
        switch (rng.int_in(0, 3)) {
        case 0:
            gen = j_form;
            break;
        case 1: { // [[I, S], [0, I]], S symmetric
            for (int p = 0; p < g; ++p)
                for (int q = p; q < g; ++q) {
                    const Rational v(rng.int_in(-2, 2));
                    gen.at(p, g + q) = v;
                    gen.at(q, g + p) = v;
                }
            break;
        }
        case 2: { // [[I, 0], [S, I]], S symmetric
            for (int p = 0; p < g; ++p)
                for (int q = p; q < g; ++q) {
                    const Rational v(rng.int_in(-2, 2));
                    gen.at(g + p, q) = v;
                    gen.at(g + q, p) = v;
                }
            break;
        }
        default: { // [[A, 0], [0, A^-T]], A an elementary transvection
            if (g > 1) {
                int p = static_cast<int>(rng.int_in(0, g - 1));
                int q = static_cast<int>(rng.int_in(0, g - 1));
                if (p == q) q = (q + 1) % g;
                const Rational v(rng.int_in(-2, 2));
                gen.at(p, q) = v;        // A = I + v E_pq
                gen.at(g + q, g + p) = -v; // A^-T = I - v E_qp
            }
            break;
        }
        }
        m = m * gen;
    }
    return m;
}

CohClass random_coh_class(Rng& rng, const ProductSpace& space, int span) {
    CohClass x(space);
    const int parts = static_cast<int>(rng.int_in(2, 4));
    for (int p = 0; p < parts; ++p) {
        DegVec deg(static_cast<std::size_t>(space.arity()));
        for (auto& d : deg) d = static_cast<int>(rng.int_in(0, 2));
        Tensor t = Tensor::zeros(component_dims(space, deg));
        for (auto& v : t.data)
            v = rng.coin() ? Rational(rng.int_in(-span, span)) : rng.rational_in(-span, span);
        x.add_component(deg, std::move(t));
    }
    return x;
}

KernelClass equivalence_from_symplectic(const RatMat& phi, int genus) {
    // gamma with (J gamma)^T = phi, wrapped in diagonal-type scalars.
    const RatMat j_form = SymplecticLattice::standard(genus).form;
    const RatMat gamma = j_form.inverse() * phi.transpose();
    return KernelClass(genus, genus, 0, 1, 1, gamma, genus - 1);
}

// -- suite plumbing -----------------------------------------------------------

void SuiteResult::expect(bool pass, const std::string& what) {
    ++checks;
    if (!pass) {
        ++failures;
        if (messages.size() < 5) messages.push_back(what);
    }
}

bool SelftestReport::ok() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

std::string SelftestReport::render() const {
    std::ostringstream out;
    int checks = 0, failures = 0;
    for (const auto& s : suites) {
        out << "suite " << std::left << std::setw(22) << s.name << std::right << std::setw(6)
            << s.checks << " checks" << std::setw(4) << s.failures << " failures\n";
        for (const auto& m : s.messages) out << "    " << m << "\n";
        checks += s.checks;
        failures += s.failures;
    }
    out << "selftest: " << suites.size() << " suites, " << checks << " checks, " << failures
        << " failures (trials=" << trials << ", seed=" << seed << ")\n";
    return out.str();
}

namespace {

RatVec random_vec(Rng& rng, int n, int span = 4) {
    RatVec v(static_cast<std::size_t>(n));
    for (auto& x : v) x = rng.rational_in(-span, span);
    return v;
}

std::string describe(const KernelClass& e) {
    return "kernel(g=" + std::to_string(e.genus_source) + "->" +
           std::to_string(e.genus_target) + ", r=" + to_string(e.rank) + ", a=" +
           to_string(e.a) + ", b=" + to_string(e.b) + ", s=" + to_string(e.ch2) + ")";
}

// ---- lattice ----------------------------------------------------------------

SuiteResult suite_lattice(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "lattice_laws";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int g = static_cast<int>(rng.int_in(0, 3));
        const auto lat = SymplecticLattice::standard(g);

        const RatVec x = random_vec(rng, 2 * g), y = random_vec(rng, 2 * g);
        s.expect(lat.pair(x, y) == -lat.pair(y, x), "form antisymmetry");

        const RatMat sp = random_symplectic(rng, g);
        const JacHom phi(lat, lat, sp);
        s.expect(preserves_polarization(phi), "symplectic matrix preserves the form");
        s.expect(is_unimodular_iso(phi), "symplectic matrix is unimodular");
        s.expect(compose(dual_hom(phi), phi) == identity_hom(lat),
                 "dual_hom inverts a symplectic map");

        const int g2 = static_cast<int>(rng.int_in(0, 3));
        const auto lat2 = SymplecticLattice::standard(g2);
        RatMat m1(2 * g2, 2 * g), m2(2 * g, 2 * g2);
        for (int i = 0; i < m1.rows(); ++i)
            for (int j = 0; j < m1.cols(); ++j) m1.at(i, j) = rng.int_in(-3, 3);
        for (int i = 0; i < m2.rows(); ++i)
            for (int j = 0; j < m2.cols(); ++j) m2.at(i, j) = rng.int_in(-3, 3);
        const JacHom f(lat, lat2, m1), h(lat2, lat, m2);
        s.expect(dual_hom(compose(h, f)) == compose(dual_hom(f), dual_hom(h)),
                 "dual_hom reverses composition");
        s.expect(dual_hom(dual_hom(f)) == f, "dual_hom is an involution");

        const JacPoint p(lat, random_vec(rng, 2 * g)), q(lat, random_vec(rng, 2 * g));
        s.expect(apply_point(phi, add(p, q)) == add(apply_point(phi, p), apply_point(phi, q)),
                 "apply_point is additive on the torus");
    }
    return s;
}

// ---- kunneth ring -----------------------------------------------------------

int total_degree(const DegVec& d) {
    int acc = 0;
    for (int x : d) acc += x;
    return acc;
}

CohClass random_homogeneous(Rng& rng, const ProductSpace& space, int span = 3) {
    DegVec deg(static_cast<std::size_t>(space.arity()));
    for (auto& d : deg) d = static_cast<int>(rng.int_in(0, 2));
    Tensor t = Tensor::zeros(component_dims(space, deg));
    for (auto& v : t.data) v = rng.rational_in(-span, span);
    CohClass x(space);
    x.add_component(deg, std::move(t));
    return x;
}

SuiteResult suite_kunneth(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "kunneth_ring";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int arity = static_cast<int>(rng.int_in(2, 3));
        std::vector<int> genera;
        for (int i = 0; i < arity; ++i) genera.push_back(static_cast<int>(rng.int_in(0, 3)));
        const ProductSpace space = ProductSpace::of(genera);

        const CohClass x = random_coh_class(rng, space);
        const CohClass y = random_coh_class(rng, space);
        const CohClass z = random_coh_class(rng, space);

        s.expect(cup(cup(x, y), z) == cup(x, cup(y, z)), "cup associativity");
        s.expect(cup(coh_unit(space), x) == x && cup(x, coh_unit(space)) == x, "cup unit");
        s.expect(cup(x + y, z) == cup(x, z) + cup(y, z), "cup bilinearity");

        // Graded commutativity on homogeneous classes.
        CohClass hx = random_homogeneous(rng, space);
        CohClass hy = random_homogeneous(rng, space);
        int dx = hx.components.empty() ? 0 : total_degree(hx.components.begin()->first);
        int dy = hy.components.empty() ? 0 : total_degree(hy.components.begin()->first);
        const Rational sign = (dx * dy) % 2 == 0 ? 1 : -1;
        s.expect(cup(hx, hy) == scale(sign, cup(hy, hx)), "graded commutativity");

        // Projection formula along a random projection.
        std::vector<int> keep;
        for (int i = 0; i < arity; ++i)
            if (rng.coin()) keep.push_back(i);
        if (keep.empty()) keep.push_back(static_cast<int>(rng.int_in(0, arity - 1)));
        std::vector<int> kept_genera;
        for (int i : keep) kept_genera.push_back(space.genus(i));
        const ProductSpace base = ProductSpace::of(kept_genera);
        const CohClass w = random_coh_class(rng, base);
        s.expect(pushforward(cup(x, pullback(space, keep, w)), keep) ==
                     cup(pushforward(x, keep), w),
                 "projection formula");
        s.expect(pushforward(x + y, keep) == pushforward(x, keep) + pushforward(y, keep),
                 "pushforward additivity");
        s.expect(pullback(space, keep, cup(w, w)) ==
                     cup(pullback(space, keep, w), pullback(space, keep, w)),
                 "pullback is a ring map");

        // Swap on 2-fold products.
        const ProductSpace pair2 =
            ProductSpace::of({static_cast<int>(rng.int_in(0, 3)), static_cast<int>(rng.int_in(0, 3))});
        const CohClass u = random_coh_class(rng, pair2);
        const CohClass v = random_coh_class(rng, pair2);
        s.expect(swap_factors(swap_factors(u)) == u, "swap involution");
        s.expect(swap_factors(cup(u, v)) == cup(swap_factors(u), swap_factors(v)),
                 "swap is a ring map");

        const CohClass inv_probe = coh_unit(pair2) + u;
        if (scalar_part(inv_probe) != 0) {
            s.expect(cup(inv_probe, inverse_of_unit(inv_probe)) == coh_unit(pair2),
                     "inverse_of_unit inverts");
        }

        // Diagonal self-intersection: Delta^2 = (2 - 2g)[pt].
        const int g = static_cast<int>(rng.int_in(0, 4));
        const ProductSpace sq = ProductSpace::of({g, g});
        const CohClass diag = diagonal_class(g);
        s.expect(cup(diag, diag) == scale(Rational(2 - 2 * g), coh_top(sq)),
                 "diagonal self-intersection");
        s.expect(cup(diag, coh_point(sq, 0)) == coh_top(sq) &&
                     cup(diag, coh_point(sq, 1)) == coh_top(sq),
                 "diagonal meets each fiber once");
        s.expect(correspondence_action(diag) == RatMat::identity(2 * g),
                 "diagonal acts as identity on H^1");
        s.expect(swap_factors(diag) == diag, "diagonal is swap-invariant");
    }
    return s;
}

// ---- grr ---------------------------------------------------------------------

SuiteResult suite_grr(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "grr_diagonal";
    Rng rng(seed);
    for (int g = 0; g <= 5; ++g) {
        const KernelClass diag = diagonal_kernel(g);
        const RatMat j_inv = SymplecticLattice::standard(g).form.inverse();
        const KernelClass expected(g, g, 0, 1, 1, j_inv, g - 1);
        s.expect(diag == expected, "diagonal kernel closed form at g=" + std::to_string(g));
        s.expect(jac_map(diag) == identity_hom(SymplecticLattice::standard(g)),
                 "diagonal jac_map is the identity");
    }
    for (int t = 0; t < trials; ++t) {
        const int g = static_cast<int>(rng.int_in(0, 4));
        const KernelClass diag = diagonal_kernel(g);
        const KClassCurve f = random_kclass(rng, g);
        s.expect(apply_k(diag, f) == f, "diagonal acts as identity (closed form)");
        s.expect(apply_k_engine(diag, f) == f, "diagonal acts as identity (engine)");

        const KernelClass e = random_kernel(rng);
        s.expect(coh_to_kernel(kernel_to_coh(e)) == e, "kernel <-> cohomology round trip");
    }
    return s;
}

// ---- kernel algebra (shift / dual / twist / swap) -----------------------------

SuiteResult suite_kernel_algebra(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "kernel_algebra";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const KernelClass e = random_kernel(rng);
        const std::string who = describe(e);

        s.expect(shift(shift(e)) == e, "shift involution: " + who);
        s.expect(dual(dual(e)) == e, "dual involution: " + who);
        s.expect(swap_kernel(swap_kernel(e)) == e, "swap involution: " + who);
        s.expect(dual(shift(e)) == shift(dual(e)), "dual commutes with shift: " + who);

        s.expect(jac_map(shift(e)).matrix == -jac_map(e).matrix,
                 "shift negates jac_map: " + who);
        s.expect(jac_map(dual(e)).matrix == -jac_map(e).matrix,
                 "dual negates jac_map: " + who);

        const Rational d1 = rng.rational_in(-3, 3), d2 = rng.rational_in(-3, 3);
        s.expect(jac_map(twist(e, d1, d2)) == jac_map(e), "twist fixes jac_map: " + who);
        const Rational d3 = rng.rational_in(-3, 3), d4 = rng.rational_in(-3, 3);
        s.expect(twist(twist(e, d1, d2), d3, d4) == twist(e, d1 + d3, d2 + d4),
                 "twists add: " + who);
        s.expect(twist(e, 0, 0) == e, "zero twist is trivial: " + who);

        const AffinePicMap pe = pic_map(e);
        const AffinePicMap ps = pic_map(shift(e));
        s.expect(ps.slope_degree == -pe.slope_degree &&
                     ps.translation_degree == -pe.translation_degree,
                 "shift negates the pic map: " + who);

        // Shift negates the whole K-map.
        const KClassCurve f = random_kclass(rng, e.genus_source);
        const KClassCurve im = apply_k(e, f);
        const KClassCurve im_shift = apply_k(shift(e), f);
        s.expect(im_shift.rank == -im.rank && im_shift.degree == -im.degree &&
                     im_shift.jac == vec_scale(-1, im.jac),
                 "shift negates apply_k: " + who);
    }
    return s;
}

// ---- functoriality -------------------------------------------------------------

SuiteResult suite_functoriality(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "functoriality";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const int g1 = static_cast<int>(rng.int_in(0, 3));
        const int g2 = static_cast<int>(rng.int_in(0, 3));
        const int g3 = static_cast<int>(rng.int_in(0, 3));
        const KernelClass e1 = random_kernel_between(rng, g1, g2);
        const KernelClass e2 = random_kernel_between(rng, g2, g3);
        const KernelClass e12 = convolve(e1, e2);
        const std::string who = describe(e1) + " * " + describe(e2);

        const KClassCurve f = random_kclass(rng, g1);
        s.expect(apply_k(e12, f) == apply_k(e2, apply_k(e1, f)),
                 "convolution composes the K-map: " + who);
        s.expect(jac_map(e12) == compose(jac_map(e2), jac_map(e1)),
                 "convolution composes jac_map: " + who);

        // Unit laws against the diagonal.
        s.expect(convolve(diagonal_kernel(g1), e1) == e1, "left unit law: " + who);
        s.expect(convolve(e1, diagonal_kernel(g2)) == e1, "right unit law: " + who);

        // Rank-corrected chain rule for the Pic shadow (the naive affine
        // composition only holds on rank-one-preserving kernels, see below).
        const AffinePicMap p1 = pic_map(e1), p2 = pic_map(e2), p12 = pic_map(e12);
        const Rational rho1 = e1.a - Rational(g1 - 1) * e1.rank;
        s.expect(p12.slope_degree == p1.slope_degree * p2.slope_degree +
                                         e1.rank * p2.translation_degree,
                 "pic slope chain rule: " + who);
        s.expect(p12.translation_degree == p2.slope_degree * p1.translation_degree +
                                               rho1 * p2.translation_degree,
                 "pic translation chain rule: " + who);
        s.expect(p12.jac_linear == compose(p2.jac_linear, p1.jac_linear),
                 "pic jac part composes: " + who);

        // Naive affine composition on rank-one-preserving kernels (r = 0,
        // a = 1): there pic_map is a complete invariant of the action.
        KernelClass n1 = random_kernel_between(rng, g1, g2);
        n1.rank = 0;
        n1.a = 1;
        KernelClass n2 = random_kernel_between(rng, g2, g3);
        n2.rank = 0;
        n2.a = 1;
        s.expect(pic_map(convolve(n1, n2)) == compose(pic_map(n2), pic_map(n1)),
                 "affine composition on rank-one-preserving kernels: " + who);

        const KernelClass e3 = random_kernel_between(rng, g3, static_cast<int>(rng.int_in(0, 3)));
        s.expect(convolve(e12, e3) == convolve(e1, convolve(e2, e3)),
                 "convolution associativity: " + who);
    }
    return s;
}

// ---- adjoints -------------------------------------------------------------------

SuiteResult suite_adjoints(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "adjoints";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const KernelClass e = random_kernel(rng);
        const std::string who = describe(e);
        s.expect(jac_map(left_adjoint(e)) == dual_hom(jac_map(e)),
                 "left adjoint induces the dual isogeny: " + who);
        s.expect(jac_map(right_adjoint(e)) == dual_hom(jac_map(e)),
                 "right adjoint induces the dual isogeny: " + who);
        s.expect(left_adjoint(shift(e)) == shift(left_adjoint(e)),
                 "left adjoint commutes with shift: " + who);
    }
    for (const auto& entry : acceptance_catalog()) {
        if (!entry.is_equivalence) continue;
        const KernelClass& e = entry.kernel;
        const KernelClass dl = diagonal_kernel(e.genus_source);
        const KernelClass dr = diagonal_kernel(e.genus_target);
        for (const KernelClass& adj : {left_adjoint(e), right_adjoint(e)}) {
            s.expect(convolve(e, adj) == dl,
                     entry.name + ": adjoint inverts on the source side");
            s.expect(convolve(adj, e) == dr,
                     entry.name + ": adjoint inverts on the target side");
        }
    }
    return s;
}

// ---- torelli ---------------------------------------------------------------------

SuiteResult suite_torelli(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "torelli";
    Rng rng(seed);
    for (const auto& entry : acceptance_catalog()) {
        const TorelliReport r = torelli_report(entry.kernel);
        s.expect(r.consistent, entry.name + ": report is consistent");
        s.expect(r.numerical_equivalence == entry.is_equivalence,
                 entry.name + ": equivalence flag matches ground truth");
    }
    for (int t = 0; t < trials; ++t) {
        // Random integral kernel: numerical equivalence must force a
        // unimodular, polarization-preserving Jacobian map.
        const KernelClass e = random_kernel(rng);
        const TorelliReport r = torelli_report(e);
        if (r.numerical_equivalence)
            s.expect(r.jac_is_isomorphism && r.jac_preserves_polarization,
                     "equivalence implies polarized isomorphism: " + describe(e));
        else
            s.expect(true, "random kernel (not an equivalence)"); // count the draw

        // Random positive case built from Sp(2g, Z), with a random twist and
        // optional shift.
        const int g = static_cast<int>(rng.int_in(0, 3));
        KernelClass pos = equivalence_from_symplectic(random_symplectic(rng, g), g);
        pos = twist(pos, rng.int_in(-2, 2), rng.int_in(-2, 2));
        if (rng.coin()) pos = shift(pos);
        const TorelliReport rp = torelli_report(pos);
        s.expect(rp.numerical_equivalence && rp.jac_is_isomorphism &&
                     rp.jac_preserves_polarization && rp.consistent,
                 "symplectic kernel is a consistent equivalence (g=" + std::to_string(g) + ")");
    }
    return s;
}

// ---- io ----------------------------------------------------------------------------

SuiteResult suite_io(int trials, std::uint64_t seed) {
    SuiteResult s;
    s.name = "io_roundtrip";
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const KernelClass e = random_kernel(rng);
        const std::string bytes = emit_kernel_json(e);
        KernelClass back = e;
        bool parsed = true;
        try {
            back = parse_kernel_json(bytes);
        } catch (const Error&) {
            parsed = false;
        }
        s.expect(parsed && back == e, "emit/parse round trip: " + describe(e));
        if (parsed)
            s.expect(emit_kernel_json(back) == bytes, "emit is canonical: " + describe(e));

        // On the wire, gamma is the action form: its transpose is the
        // Jacobian matrix.
        const RatMat action = SymplecticLattice::standard(e.genus_source).form * e.gamma;
        s.expect(jac_map(e).matrix == action.transpose(),
                 "wire gamma transposes to the jac matrix: " + describe(e));
    }
    return s;
}

} // namespace

SelftestReport run_selftest(int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("selftest needs at least one trial");
    SelftestReport report;
    report.trials = trials;
    report.seed = seed;
    int idx = 0;
    const auto next_seed = [&]() { return seed * 1000003ULL + static_cast<std::uint64_t>(++idx); };
    report.suites.push_back(suite_lattice(trials, next_seed()));
    report.suites.push_back(suite_kunneth(trials, next_seed()));
    report.suites.push_back(suite_grr(trials, next_seed()));
    report.suites.push_back(suite_kernel_algebra(trials, next_seed()));
    report.suites.push_back(suite_functoriality(trials, next_seed()));
    report.suites.push_back(suite_adjoints(trials, next_seed()));
    report.suites.push_back(suite_torelli(trials, next_seed()));
    report.suites.push_back(suite_io(trials, next_seed()));
    return report;
}

} // namespace fmk
