#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "nslat/linalg.hpp"
#include "nslat/quat.hpp"

namespace nslat {

/**
 * Divisor class on the product of two copies of a supersingular elliptic
 * curve, represented by its Hermitian matrix
 *
 *   [ A       beta ]
 *   [ conj(beta) D ],   A, D integers, beta in the maximal order.
 *
 * A and D are the intersection numbers with the two rulings E1 and E2.
 */
struct DivisorMatrix {
    Int A;
    Int D;
    OrderElement beta;
    const AlgebraParams& params() const { return beta.params(); }
    bool operator==(const DivisorMatrix&) const = default;
};

/// Coordinates in the fixed rank-6 basis
/// (E1, E2, Delta, Delta_(1+alpha)/2, Delta_F(1+alpha)/2, Delta_(a+F)alpha/q).
using DivisorCoords = std::array<Int, 6>;

inline const std::array<const char*, 6>& basis_labels() {
    static const std::array<const char*, 6> labels = {
        "E1", "E2", "Delta", "Delta_(1+alpha)/2", "Delta_F(1+alpha)/2", "Delta_(a+F)alpha/q"};
    return labels;
}

// Graph-type divisor pulled back along (a1, a2): the Hermitian matrix with
// diagonal nrd(a1), nrd(a2) and off-diagonal conj(a1)*a2.
inline DivisorMatrix j_of_delta(const OrderElement& a1, const OrderElement& a2) {
    require_same(a1.params(), a2.params());
    OrderElement beta = order_from_quat(conj(a1.to_quat()) * a2.to_quat());
    return {nrd(a1), nrd(a2), beta};
}

inline DivisorMatrix divisor_e1(const AlgebraParams& par) {
    return {0, 1, OrderElement::zero(par)};
}

inline DivisorMatrix divisor_e2(const AlgebraParams& par) {
    return {1, 0, OrderElement::zero(par)};
}

inline std::array<DivisorMatrix, 6> basis_divisors(const AlgebraParams& par) {
    const auto w = order_basis(par);
    const auto one = OrderElement::one(par);
    return {divisor_e1(par),       divisor_e2(par),       j_of_delta(one, w[0]),
            j_of_delta(one, w[1]), j_of_delta(one, w[2]), j_of_delta(one, w[3])};
}

inline DivisorMatrix coords_to_matrix(const AlgebraParams& par, const DivisorCoords& v) {
    const auto b = basis_divisors(par);
    Int a = 0, d = 0;
    OrderElement beta = OrderElement::zero(par);
    for (int i = 0; i < 6; ++i) {
        a += v[i] * b[i].A;
        d += v[i] * b[i].D;
        beta = beta + b[i].beta * v[i];
    }
    return {a, d, beta};
}

// Closed-form inverse of coords_to_matrix; the transition between the two
// descriptions is unimodular, so this is exact over the integers.
inline DivisorCoords matrix_to_coords(const DivisorMatrix& m) {
    const auto& par = m.params();
    const auto w = order_basis(par);
    const auto& y = m.beta.coords();
    DivisorCoords v;
    v[2] = y[0];
    v[3] = y[1];
    v[4] = y[2];
    v[5] = y[3];
    v[1] = m.A - (y[0] + y[1] + y[2] + y[3]);
    Int norms = 0;
    for (int i = 0; i < 4; ++i) norms += y[i] * nrd(w[i]);
    v[0] = m.D - norms;
    return v;
}

inline Int intersect(const DivisorMatrix& l1, const DivisorMatrix& l2) {
    require_same(l1.params(), l2.params());
    return l2.A * l1.D + l1.A * l2.D - trd(conj(l1.beta) * l2.beta);
}

inline Int self_int(const DivisorMatrix& l) { return 2 * (l.A * l.D - nrd(l.beta)); }

/// 2x2 matrix over the order, row-major.
struct OrderMat {
    OrderElement e00, e01, e10, e11;
};

inline OrderMat mat_mul(const OrderMat& g, const OrderMat& h) {
    return {g.e00 * h.e00 + g.e01 * h.e10, g.e00 * h.e01 + g.e01 * h.e11,
            g.e10 * h.e00 + g.e11 * h.e10, g.e10 * h.e01 + g.e11 * h.e11};
}

// Pullback of a divisor class along the endomorphism g: conjugate the
// Hermitian matrix to transpose(conj(g)) * M * g inside the algebra.
inline DivisorMatrix pullback(const OrderMat& g, const DivisorMatrix& l) {
    require_same(g.e00.params(), l.params());
    const auto& par = l.params();
    const QuatElement m00 = QuatElement::scalar(par, Rat(l.A));
    const QuatElement m01 = l.beta.to_quat();
    const QuatElement m10 = conj(m01);
    const QuatElement m11 = QuatElement::scalar(par, Rat(l.D));

    const QuatElement g00 = g.e00.to_quat(), g01 = g.e01.to_quat();
    const QuatElement g10 = g.e10.to_quat(), g11 = g.e11.to_quat();
    const QuatElement l00 = conj(g00), l01 = conj(g10);
    const QuatElement l10 = conj(g01), l11 = conj(g11);

    const QuatElement t00 = l00 * m00 + l01 * m10;
    const QuatElement t01 = l00 * m01 + l01 * m11;
    const QuatElement t10 = l10 * m00 + l11 * m10;
    const QuatElement t11 = l10 * m01 + l11 * m11;

    const QuatElement r00 = t00 * g00 + t01 * g10;
    const QuatElement r01 = t00 * g01 + t01 * g11;
    const QuatElement r10 = t10 * g00 + t11 * g10;
    const QuatElement r11 = t10 * g01 + t11 * g11;

    auto diag_int = [](const QuatElement& x) {
        if (!(x[1] == 0 && x[2] == 0 && x[3] == 0) || x[0].get_den() != 1)
            throw std::logic_error("pullback produced a non-integral diagonal");
        return x[0].get_num();
    };
    if (!(r10 == conj(r01))) throw std::logic_error("pullback produced a non-Hermitian matrix");
    return {diag_int(r00), diag_int(r11), order_from_quat(r01)};
}

/// Intersection matrix of the fixed basis with its exact inertia data.
struct GramResult {
    std::array<std::array<Int, 6>, 6> entries;
    int rank = 0;
    int positive = 0;
    int negative = 0;
    Int det;
    bool operator==(const GramResult&) const = default;
};

inline GramResult gram_matrix(const AlgebraParams& par) {
    const auto b = basis_divisors(par);
    GramResult out;
    std::vector<std::vector<Int>> g(6, std::vector<Int>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            out.entries[i][j] = intersect(b[i], b[j]);
            g[i][j] = out.entries[i][j];
        }
    const SymSpectrum sp = symmetric_spectrum(g);
    out.rank = sp.rank;
    out.positive = sp.positive;
    out.negative = sp.negative;
    out.det = sp.det;
    return out;
}

}  // namespace nslat
