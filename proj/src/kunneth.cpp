#include "fmk/kunneth.hpp"

#include "fmk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace fmk {

namespace {

// Entry (a, b) of the standard symplectic Gram matrix J_g.
int std_form_entry(int genus, int a, int b) {
    if (a < genus && b == a + genus) return 1;
    if (a >= genus && b == a - genus) return -1;
    return 0;
}

std::vector<std::size_t> strides_of(const std::vector<int>& dims) {
    std::vector<std::size_t> strides(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i)
        strides[i] = strides[i + 1] * static_cast<std::size_t>(dims[i + 1]);
    return strides;
}

void check_slot(const ProductSpace& space, int slot) {
    if (slot < 0 || slot >= space.arity()) throw PreconditionError("slot index out of range");
}

void check_degrees(const ProductSpace& space, const DegVec& deg) {
    if (static_cast<int>(deg.size()) != space.arity())
        throw PreconditionError("multi-degree arity mismatch");
    for (int d : deg)
        if (d < 0 || d > 2) throw PreconditionError("per-factor degree must be 0, 1 or 2");
}

// Validates that slots is a strictly increasing list of slot indices.
void check_slot_list(const ProductSpace& space, const std::vector<int>& slots) {
    for (std::size_t i = 0; i < slots.size(); ++i) {
        check_slot(space, slots[i]);
        if (i > 0 && slots[i] <= slots[i - 1])
            throw PreconditionError("slot list must be strictly increasing");
    }
}

} // namespace

ProductSpace ProductSpace::of(const std::vector<int>& genera) {
    if (genera.empty() || genera.size() > 3)
        throw PreconditionError("a product space has 1 to 3 factors");
    ProductSpace s;
    for (int g : genera) {
        if (g < 0) throw PreconditionError("negative genus");
        s.factors.push_back(CurveSpec{g});
    }
    return s;
}

int ProductSpace::genus(int slot) const {
    check_slot(*this, slot);
    return factors[static_cast<std::size_t>(slot)].genus;
}

Tensor Tensor::zeros(const std::vector<int>& dims) {
    Tensor t;
    t.dims = dims;
    std::size_t n = 1;
    for (int d : dims) {
        if (d < 0) throw PreconditionError("negative tensor dimension");
        n *= static_cast<std::size_t>(d);
    }
    t.data.assign(n, Rational(0));
    return t;
}

bool Tensor::is_zero() const {
    return std::all_of(data.begin(), data.end(), [](const Rational& r) { return r == 0; });
}

std::vector<int> component_dims(const ProductSpace& space, const DegVec& deg) {
    check_degrees(space, deg);
    std::vector<int> dims(deg.size());
    for (int i = 0; i < space.arity(); ++i)
        dims[static_cast<std::size_t>(i)] = deg[static_cast<std::size_t>(i)] == 1 ? space.h1_rank(i) : 1;
    return dims;
}

void CohClass::add_component(const DegVec& deg, Tensor t) {
    if (t.dims != component_dims(space, deg))
        throw PreconditionError("tensor shape does not match multi-degree");
    auto it = components.find(deg);
    if (it == components.end()) {
        components.emplace(deg, std::move(t));
    } else {
        for (std::size_t i = 0; i < t.data.size(); ++i) it->second.data[i] += t.data[i];
    }
    normalize();
}

const Tensor* CohClass::find(const DegVec& deg) const {
    auto it = components.find(deg);
    return it == components.end() ? nullptr : &it->second;
}

Rational CohClass::coefficient(const DegVec& deg, const std::vector<int>& idx) const {
    check_degrees(space, deg);
    const Tensor* t = find(deg);
    if (!t) return Rational(0);
    if (idx.size() != t->dims.size()) throw PreconditionError("coefficient index arity mismatch");
    std::size_t flat = 0;
    const auto strides = strides_of(t->dims);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= t->dims[i])
            throw PreconditionError("coefficient index out of range");
        flat += static_cast<std::size_t>(idx[i]) * strides[i];
    }
    return t->data[flat];
}

void CohClass::normalize() {
    for (auto it = components.begin(); it != components.end();) {
        if (it->second.is_zero())
            it = components.erase(it);
        else
            ++it;
    }
}

CohClass coh_zero(const ProductSpace& space) { return CohClass(space); }

CohClass coh_unit(const ProductSpace& space) {
    CohClass x(space);
    DegVec deg(static_cast<std::size_t>(space.arity()), 0);
    Tensor t = Tensor::zeros(component_dims(space, deg));
    t.data[0] = 1;
    x.add_component(deg, std::move(t));
    return x;
}

CohClass coh_point(const ProductSpace& space, int slot) {
    check_slot(space, slot);
    CohClass x(space);
    DegVec deg(static_cast<std::size_t>(space.arity()), 0);
    deg[static_cast<std::size_t>(slot)] = 2;
    Tensor t = Tensor::zeros(component_dims(space, deg));
    t.data[0] = 1;
    x.add_component(deg, std::move(t));
    return x;
}

CohClass coh_top(const ProductSpace& space) {
    CohClass x(space);
    DegVec deg(static_cast<std::size_t>(space.arity()), 2);
    Tensor t = Tensor::zeros(component_dims(space, deg));
    t.data[0] = 1;
    x.add_component(deg, std::move(t));
    return x;
}

CohClass coh_h1(const ProductSpace& space, int slot, int index) {
    check_slot(space, slot);
    RatVec v(static_cast<std::size_t>(space.h1_rank(slot)), Rational(0));
    if (index < 0 || index >= space.h1_rank(slot))
        throw PreconditionError("H^1 basis index out of range");
    v[static_cast<std::size_t>(index)] = 1;
    return coh_h1_vec(space, slot, v);
}

CohClass coh_h1_vec(const ProductSpace& space, int slot, const RatVec& v) {
    check_slot(space, slot);
    if (static_cast<int>(v.size()) != space.h1_rank(slot))
        throw PreconditionError("H^1 vector has wrong length");
    CohClass x(space);
    DegVec deg(static_cast<std::size_t>(space.arity()), 0);
    deg[static_cast<std::size_t>(slot)] = 1;
    Tensor t = Tensor::zeros(component_dims(space, deg));
    t.data = v;
    x.add_component(deg, std::move(t));
    return x;
}

CohClass operator+(const CohClass& x, const CohClass& y) {
    if (x.space != y.space) throw PreconditionError("cohomology class sum: space mismatch");
    CohClass out = x;
    for (const auto& [deg, t] : y.components) out.add_component(deg, t);
    return out;
}

CohClass operator-(const CohClass& x) { return scale(Rational(-1), x); }

CohClass operator-(const CohClass& x, const CohClass& y) { return x + (-y); }

CohClass scale(const Rational& c, const CohClass& x) {
    CohClass out(x.space);
    if (c == 0) return out;
    for (const auto& [deg, t] : x.components) {
        Tensor s = t;
        for (auto& v : s.data) v *= c;
        out.components.emplace(deg, std::move(s));
    }
    return out;
}

CohClass cup(const CohClass& x, const CohClass& y) {
    if (x.space != y.space) throw PreconditionError("cup: space mismatch");
    const int n = x.space.arity();
    CohClass out(x.space);

    for (const auto& [dx, tx] : x.components) {
        for (const auto& [dy, ty] : y.components) {
            DegVec dr(static_cast<std::size_t>(n));
            bool alive = true;
            for (int i = 0; i < n && alive; ++i) {
                dr[static_cast<std::size_t>(i)] =
                    dx[static_cast<std::size_t>(i)] + dy[static_cast<std::size_t>(i)];
                alive = dr[static_cast<std::size_t>(i)] <= 2;
            }
            if (!alive) continue;

            // Koszul sign from commuting each x_i past the y_j with j < i.
            int expo = 0, dy_prefix = 0;
            for (int i = 0; i < n; ++i) {
                expo += dx[static_cast<std::size_t>(i)] * dy_prefix;
                dy_prefix += dy[static_cast<std::size_t>(i)];
            }
            const int sign = (expo % 2 == 0) ? 1 : -1;

            Tensor tr = Tensor::zeros(component_dims(x.space, dr));
            const auto sx = strides_of(tx.dims);
            const auto sy = strides_of(ty.dims);
            const auto sr = strides_of(tr.dims);

            for (std::size_t fa = 0; fa < tx.data.size(); ++fa) {
                if (tx.data[fa] == 0) continue;
                for (std::size_t fb = 0; fb < ty.data.size(); ++fb) {
                    if (ty.data[fb] == 0) continue;
                    Rational w = tx.data[fa] * ty.data[fb];
                    if (sign < 0) w = -w;
                    std::size_t fr = 0;
                    bool nonzero = true;
                    for (int i = 0; i < n && nonzero; ++i) {
                        const std::size_t ui = static_cast<std::size_t>(i);
                        const int ai = static_cast<int>(fa / sx[ui]) % tx.dims[ui];
                        const int bi = static_cast<int>(fb / sy[ui]) % ty.dims[ui];
                        if (dx[ui] == 1 && dy[ui] == 1) {
                            // e_a . e_b = E(e_a, e_b)[pt] within this slot.
                            const int e = std_form_entry(x.space.genus(i), ai, bi);
                            if (e == 0) {
                                nonzero = false;
                            } else if (e < 0) {
                                w = -w;
                            }
                        } else if (dr[ui] == 1) {
                            const int ci = dx[ui] == 1 ? ai : bi;
                            fr += static_cast<std::size_t>(ci) * sr[ui];
                        }
                    }
                    if (nonzero) tr.data[fr] += w;
                }
            }
            out.add_component(dr, std::move(tr));
        }
    }
    return out;
}

CohClass pullback(const ProductSpace& target, const std::vector<int>& image_slots,
                  const CohClass& x) {
    check_slot_list(target, image_slots);
    if (static_cast<int>(image_slots.size()) != x.space.arity())
        throw PreconditionError("pullback: one image slot per source factor");
    for (std::size_t i = 0; i < image_slots.size(); ++i) {
        if (target.factors[static_cast<std::size_t>(image_slots[i])] != x.space.factors[i])
            throw PreconditionError("pullback: factor genus mismatch");
    }
    CohClass out(target);
    for (const auto& [deg, t] : x.components) {
        DegVec dr(static_cast<std::size_t>(target.arity()), 0);
        for (std::size_t i = 0; i < image_slots.size(); ++i)
            dr[static_cast<std::size_t>(image_slots[i])] = deg[i];
        // Inserted slots have degree 0, i.e. axis length 1: the flat data is
        // unchanged by the reshape.
        Tensor tr = Tensor::zeros(component_dims(target, dr));
        tr.data = t.data;
        out.add_component(dr, std::move(tr));
    }
    return out;
}

CohClass pushforward(const CohClass& x, const std::vector<int>& keep_slots) {
    check_slot_list(x.space, keep_slots);
    if (keep_slots.empty()) throw PreconditionError("pushforward must keep at least one slot");
    std::vector<int> genera;
    for (int s : keep_slots) genera.push_back(x.space.genus(s));
    const ProductSpace target = ProductSpace::of(genera);

    std::vector<bool> kept(static_cast<std::size_t>(x.space.arity()), false);
    for (int s : keep_slots) kept[static_cast<std::size_t>(s)] = true;

    CohClass out(target);
    for (const auto& [deg, t] : x.components) {
        bool survives = true;
        for (int i = 0; i < x.space.arity() && survives; ++i)
            if (!kept[static_cast<std::size_t>(i)]) survives = deg[static_cast<std::size_t>(i)] == 2;
        if (!survives) continue;
        DegVec dr;
        for (int s : keep_slots) dr.push_back(deg[static_cast<std::size_t>(s)]);
        // Dropped slots have degree 2, i.e. axis length 1: flat data unchanged.
        Tensor tr = Tensor::zeros(component_dims(target, dr));
        tr.data = t.data;
        out.add_component(dr, std::move(tr));
    }
    return out;
}

CohClass swap_factors(const CohClass& x) {
    if (x.space.arity() != 2) throw PreconditionError("swap_factors needs a 2-fold product");
    const ProductSpace target =
        ProductSpace::of({x.space.genus(1), x.space.genus(0)});
    CohClass out(target);
    for (const auto& [deg, t] : x.components) {
        const DegVec dr = {deg[1], deg[0]};
        Tensor tr = Tensor::zeros(component_dims(target, dr));
        for (int i = 0; i < t.dims[0]; ++i)
            for (int j = 0; j < t.dims[1]; ++j)
                tr.data[static_cast<std::size_t>(j) * static_cast<std::size_t>(t.dims[0]) + static_cast<std::size_t>(i)] =
                    t.data[static_cast<std::size_t>(i) * static_cast<std::size_t>(t.dims[1]) + static_cast<std::size_t>(j)];
        if (deg[0] % 2 == 1 && deg[1] % 2 == 1) {
            for (auto& v : tr.data) v = -v;
        }
        out.add_component(dr, std::move(tr));
    }
    return out;
}

CohClass diagonal_class(int genus) {
    const ProductSpace s = ProductSpace::of({genus, genus});
    CohClass x = coh_point(s, 0) + coh_point(s, 1);
    if (genus > 0) {
        // Gamma = sum_{i,k} (J^{-1})_{ik} e_i x e_k restricted to the
        // standard form: J^{-1} = -J.
        Tensor t = Tensor::zeros(component_dims(s, {1, 1}));
        const int n = 2 * genus;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const int e = std_form_entry(genus, i, k);
                if (e != 0)
                    t.data[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] = -e;
            }
        x.add_component({1, 1}, std::move(t));
    }
    return x;
}

RatMat correspondence_action(const CohClass& x) {
    if (x.space.arity() != 2)
        throw PreconditionError("correspondence_action needs a 2-fold product");
    const int g = x.space.genus(0);
    const int gp = x.space.genus(1);
    RatMat m(2 * g, 2 * gp);
    if (const Tensor* t = x.find({1, 1})) {
        for (int i = 0; i < 2 * g; ++i)
            for (int k = 0; k < 2 * gp; ++k)
                m.at(i, k) = t->data[static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * gp) + static_cast<std::size_t>(k)];
    }
    // w |-> push(pull(w) . x) sends e_k to the k-th row of J M, so the
    // matrix acting on column vectors is (J M)^T.
    RatMat jm(2 * g, 2 * gp);
    for (int i = 0; i < 2 * g; ++i) {
        for (int k = 0; k < 2 * g; ++k) {
            const int e = std_form_entry(g, i, k);
            if (e == 0) continue;
            for (int j = 0; j < 2 * gp; ++j)
                jm.at(i, j) += Rational(e) * m.at(k, j);
        }
    }
    return jm.transpose();
}

CohClass inverse_of_unit(const CohClass& x) {
    const Rational c = scalar_part(x);
    if (c == 0) throw MathError("inverse_of_unit: scalar term is zero");
    // x = c(1 + n) with n nilpotent; the series ends because the positive-
    // degree part dies beyond total degree 2 * arity.
    const CohClass n = scale(1 / c, x) - coh_unit(x.space);
    CohClass acc = coh_unit(x.space);
    CohClass power = coh_unit(x.space);
    for (int k = 0; k < 2 * x.space.arity(); ++k) {
        power = cup(power, -n);
        if (power.is_zero()) break;
        acc = acc + power;
    }
    return scale(1 / c, acc);
}

CohClass relative_todd(const ProductSpace& space, const std::vector<int>& keep_slots) {
    check_slot_list(space, keep_slots);
    std::vector<bool> kept(static_cast<std::size_t>(space.arity()), false);
    for (int s : keep_slots) kept[static_cast<std::size_t>(s)] = true;
    CohClass td = coh_unit(space);
    for (int i = 0; i < space.arity(); ++i) {
        if (kept[static_cast<std::size_t>(i)]) continue;
        // Td(T_C) = 1 - (g - 1)[pt] for a genus-g curve.
        const CohClass factor =
            coh_unit(space) - scale(Rational(space.genus(i) - 1), coh_point(space, i));
        td = cup(td, factor);
    }
    return td;
}

Rational scalar_part(const CohClass& x) {
    return x.coefficient(DegVec(static_cast<std::size_t>(x.space.arity()), 0),
                         std::vector<int>(static_cast<std::size_t>(x.space.arity()), 0));
}

Rational top_part(const CohClass& x) {
    return x.coefficient(DegVec(static_cast<std::size_t>(x.space.arity()), 2),
                         std::vector<int>(static_cast<std::size_t>(x.space.arity()), 0));
}

} // namespace fmk
