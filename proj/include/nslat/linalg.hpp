#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nslat/arith.hpp"

namespace nslat {

template <class Field>
using Matrix = std::vector<std::vector<typename Field::Element>>;

// In-place reduced row echelon form. Returns the rank; pivot columns are
// appended to *pivot_cols in increasing order when requested.
template <class Field>
int rref(Matrix<Field>& m, const Field& f, std::vector<int>* pivot_cols = nullptr) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!f.is_zero(m[i][c])) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        const auto scale = f.inv(m[r][c]);
        for (int j = c; j < cols; ++j) m[r][j] = f.mul(scale, m[r][j]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            const auto factor = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

template <class Field>
int rank(Matrix<Field> m, const Field& f) {
    return rref(m, f);
}

// Canonical basis of the right null space: the unique reduced row echelon
// basis, rows ordered by pivot column.
template <class Field>
Matrix<Field> nullspace_basis(Matrix<Field> m, const Field& f) {
    if (m.empty()) return {};
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> piv;
    const int rk = rref(m, f, &piv);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    Matrix<Field> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<typename Field::Element> v(cols, f.zero());
        v[c] = f.one();
        for (int i = 0; i < rk; ++i) v[piv[i]] = f.neg(m[i][c]);
        basis.push_back(std::move(v));
    }
    rref(basis, f);
    return basis;
}

// Solution of a*x = b when a has full column rank and the system is
// consistent; nullopt otherwise.
template <class Field>
std::optional<std::vector<typename Field::Element>> solve_unique(
    Matrix<Field> a, const std::vector<typename Field::Element>& b, const Field& f) {
    if (a.empty()) return std::nullopt;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> piv;
    rref(a, f, &piv);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    if (static_cast<int>(piv.size()) != cols) return std::nullopt;
    std::vector<typename Field::Element> x(cols, f.zero());
    for (int i = 0; i < cols; ++i) x[piv[i]] = a[i][cols];
    return x;
}

template <class Field>
bool same_row_space(Matrix<Field> x, Matrix<Field> y, const Field& f) {
    const int rx = rref(x, f);
    const int ry = rref(y, f);
    if (rx != ry) return false;
    x.resize(rx);
    y.resize(ry);
    return x == y;
}

inline Rat det_rational(std::vector<std::vector<Rat>> m) {
    const int n = static_cast<int>(m.size());
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i) {
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return Rat(0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            const Rat factor = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
        }
    }
    return det;
}

/// Exact inertia data of a symmetric integer matrix.
struct SymSpectrum {
    int rank = 0;
    int positive = 0;
    int negative = 0;
    Int det;
    bool operator==(const SymSpectrum&) const = default;
};

// Characteristic polynomial by Faddeev-LeVerrier over exact rationals,
// then Descartes' rule on the reduced polynomial. A symmetric matrix has
// only real eigenvalues, so the sign-variation count is exact.
inline SymSpectrum symmetric_spectrum(const std::vector<std::vector<Int>>& g) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<Rat>> gr(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gr[i][j] = Rat(g[i][j]);

    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    std::vector<Rat> cs(n + 1);
    cs[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> gm(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (gr[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) gm[i][j] += gr[i][l] * m[l][j];
            }
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += gm[i][i];
        cs[k] = -tr / k;
        m = std::move(gm);
        for (int i = 0; i < n; ++i) m[i][i] += cs[k];
    }

    SymSpectrum out;
    int zero_mult = 0;
    while (zero_mult < n && cs[n - zero_mult] == 0) ++zero_mult;
    out.rank = n - zero_mult;
    int prev = 1;
    for (int k = 1; k <= out.rank; ++k) {
        if (cs[k] == 0) continue;
        const int s = cs[k] > 0 ? 1 : -1;
        if (s != prev) {
            ++out.positive;
            prev = s;
        }
    }
    out.negative = out.rank - out.positive;
    // char poly is det(lambda*I - G), so det(G) = (-1)^n * cs[n].
    Rat d = n % 2 == 0 ? cs[n] : -cs[n];
    if (d.get_den() != 1) throw std::logic_error("integer matrix has integer determinant");
    out.det = d.get_num();
    return out;
}

}  // namespace nslat
