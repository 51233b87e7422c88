#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "nslat/arith.hpp"

namespace nslat {

/**
 * Parameters fixing the rational quaternion algebra B = Q<F, alpha> with
 *
 *   F^2 = -p,  alpha^2 = -q,  F*alpha = -alpha*F,
 *
 * together with a maximal order
 *
 *   O = Z + Z*(1+alpha)/2 + Z*F(1+alpha)/2 + Z*(a+F)alpha/q.
 *
 * Admissibility: p, q prime, p >= 3, q = 3 (mod 8), q != p, -q a
 * quadratic non-residue mod p, and 0 <= a < q with a^2 = -p (mod q).
 */
struct AlgebraParams {
    Int p;
    Int q;
    Int a;
    bool operator==(const AlgebraParams&) const = default;
};

class MismatchedParams : public std::invalid_argument {
  public:
    MismatchedParams() : std::invalid_argument("operands belong to different algebras") {}
};

inline void require_same(const AlgebraParams& x, const AlgebraParams& y) {
    if (!(x == y)) throw MismatchedParams();
}

inline void validate_params(const AlgebraParams& par) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("invalid algebra parameters: " + what);
    };
    if (par.p < 3 || !is_prime(par.p)) fail("p must be a prime >= 3");
    if (!is_prime(par.q)) fail("q must be prime");
    if (par.q == par.p) fail("q must differ from p");
    if (mod_reduce(par.q, 8) != 3) fail("q must be 3 (mod 8)");
    if (legendre(-par.q, par.p) != -1) fail("-q must be a non-residue mod p");
    if (par.a < 0 || par.a >= par.q) fail("a must lie in [0, q)");
    if (mod_reduce(par.a * par.a + par.p, par.q) != 0) fail("a^2 must be -p (mod q)");
}

class QSearchExhausted : public std::runtime_error {
  public:
    explicit QSearchExhausted(const Int& cap)
        : std::runtime_error("no admissible q below " + cap.get_str()) {}
};

// Smallest admissible q for the given p, then the smaller root a of
// x^2 = -p (mod q). Deterministic; throws QSearchExhausted past the cap.
inline AlgebraParams find_params(const Int& p, const Int& q_cap = Int(100000)) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be a prime >= 3");
    for (Int q = 3; q <= q_cap; q += 8) {
        if (q == p || !is_prime(q)) continue;
        if (legendre(-q, p) != -1) continue;
        const auto a = sqrt_mod_prime(-p, q);
        if (!a) continue;
        AlgebraParams par{p, q, *a};
        validate_params(par);
        return par;
    }
    throw QSearchExhausted(q_cap);
}

/// Element of B with exact rational coordinates in the basis 1, F, alpha, F*alpha.
class QuatElement {
  public:
    QuatElement(AlgebraParams par, Rat x0, Rat x1, Rat x2, Rat x3)
        : par_(std::move(par)), c_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

    static QuatElement zero(const AlgebraParams& par) { return {par, 0, 0, 0, 0}; }
    static QuatElement one(const AlgebraParams& par) { return {par, 1, 0, 0, 0}; }
    static QuatElement scalar(const AlgebraParams& par, Rat s) {
        return {par, std::move(s), 0, 0, 0};
    }
    static QuatElement gen_f(const AlgebraParams& par) { return {par, 0, 1, 0, 0}; }
    static QuatElement gen_alpha(const AlgebraParams& par) { return {par, 0, 0, 1, 0}; }

    const AlgebraParams& params() const { return par_; }
    const Rat& operator[](int i) const { return c_[i]; }

    bool operator==(const QuatElement& o) const { return par_ == o.par_ && c_ == o.c_; }

    QuatElement operator-() const { return {par_, -c_[0], -c_[1], -c_[2], -c_[3]}; }

    QuatElement operator+(const QuatElement& o) const {
        require_same(par_, o.par_);
        return {par_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }

    QuatElement operator-(const QuatElement& o) const { return *this + (-o); }

    QuatElement operator*(const QuatElement& o) const {
        require_same(par_, o.par_);
        const auto& x = c_;
        const auto& y = o.c_;
        const Rat p(par_.p), q(par_.q);
        Rat z0 = x[0] * y[0] - p * x[1] * y[1] - q * x[2] * y[2] - p * q * x[3] * y[3];
        Rat z1 = x[0] * y[1] + x[1] * y[0] + q * x[2] * y[3] - q * x[3] * y[2];
        Rat z2 = x[0] * y[2] + x[2] * y[0] - p * x[1] * y[3] + p * x[3] * y[1];
        Rat z3 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
        return {par_, std::move(z0), std::move(z1), std::move(z2), std::move(z3)};
    }

    QuatElement operator*(const Rat& s) const {
        return {par_, c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
    }

  private:
    AlgebraParams par_;
    std::array<Rat, 4> c_;
};

inline QuatElement conj(const QuatElement& x) {
    return {x.params(), x[0], -x[1], -x[2], -x[3]};
}

inline Rat nrd(const QuatElement& x) {
    const Rat p(x.params().p), q(x.params().q);
    return x[0] * x[0] + p * x[1] * x[1] + q * x[2] * x[2] + p * q * x[3] * x[3];
}

inline Rat trd(const QuatElement& x) { return 2 * x[0]; }

inline bool is_zero(const QuatElement& x) {
    return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0;
}

struct NotInOrder : std::runtime_error {
    std::array<Rat, 4> rational_coords;
    explicit NotInOrder(std::array<Rat, 4> rc)
        : std::runtime_error("quaternion does not lie in the maximal order"),
          rational_coords(std::move(rc)) {}
};

// Coordinates of x in the order basis (1, (1+alpha)/2, F(1+alpha)/2,
// (a+F)alpha/q), as exact rationals. x lies in O iff all four are integers.
inline std::array<Rat, 4> rational_order_coords(const QuatElement& x) {
    const Rat q(x.params().q), a(x.params().a);
    Rat y2 = 2 * x[1];
    Rat y3 = q * (x[3] - x[1]);
    Rat h = x[2] - a * x[3] + a * x[1];
    Rat y1 = 2 * h;
    Rat y0 = x[0] - h;
    return {std::move(y0), std::move(y1), std::move(y2), std::move(y3)};
}

inline std::array<Int, 4> to_order_coords(const QuatElement& x) {
    auto rc = rational_order_coords(x);
    for (const Rat& y : rc)
        if (y.get_den() != 1) throw NotInOrder(rc);
    return {rc[0].get_num(), rc[1].get_num(), rc[2].get_num(), rc[3].get_num()};
}

/// Element of the maximal order O, stored by its integer order coordinates.
class OrderElement {
  public:
    OrderElement(AlgebraParams par, std::array<Int, 4> y)
        : par_(std::move(par)), y_(std::move(y)) {}
    OrderElement(AlgebraParams par, Int y0, Int y1, Int y2, Int y3)
        : par_(std::move(par)), y_{std::move(y0), std::move(y1), std::move(y2), std::move(y3)} {}

    static OrderElement zero(const AlgebraParams& par) { return {par, 0, 0, 0, 0}; }
    static OrderElement one(const AlgebraParams& par) { return {par, 1, 0, 0, 0}; }
    static OrderElement from_int(const AlgebraParams& par, Int n) {
        return {par, std::move(n), 0, 0, 0};
    }

    const AlgebraParams& params() const { return par_; }
    const std::array<Int, 4>& coords() const { return y_; }

    QuatElement to_quat() const {
        const Rat half(1, 2);
        const Rat a(par_.a), q(par_.q);
        Rat y0(y_[0]), y1(y_[1]), y2(y_[2]), y3(y_[3]);
        Rat x0 = y0 + half * y1;
        Rat x1 = half * y2;
        Rat x2 = half * y1 + a * y3 / q;
        Rat x3 = half * y2 + y3 / q;
        return {par_, std::move(x0), std::move(x1), std::move(x2), std::move(x3)};
    }

    bool operator==(const OrderElement&) const = default;

    OrderElement operator-() const { return {par_, -y_[0], -y_[1], -y_[2], -y_[3]}; }

    OrderElement operator+(const OrderElement& o) const {
        require_same(par_, o.par_);
        return {par_, y_[0] + o.y_[0], y_[1] + o.y_[1], y_[2] + o.y_[2], y_[3] + o.y_[3]};
    }

    OrderElement operator-(const OrderElement& o) const { return *this + (-o); }

    OrderElement operator*(const Int& s) const {
        return {par_, y_[0] * s, y_[1] * s, y_[2] * s, y_[3] * s};
    }

    OrderElement operator*(const OrderElement& o) const;

  private:
    AlgebraParams par_;
    std::array<Int, 4> y_;
};

inline OrderElement order_from_quat(const QuatElement& x) {
    return {x.params(), to_order_coords(x)};
}

inline OrderElement OrderElement::operator*(const OrderElement& o) const {
    // O is a ring, so the product converts back without remainder.
    return order_from_quat(to_quat() * o.to_quat());
}

// conj fixes 1 and negates the other three basis vectors up to the
// correction conj((1+alpha)/2) = 1 - (1+alpha)/2.
inline OrderElement conj(const OrderElement& x) {
    const auto& y = x.coords();
    return {x.params(), y[0] + y[1], -y[1], -y[2], -y[3]};
}

inline Int nrd(const OrderElement& x) {
    const Rat n = nrd(x.to_quat());
    if (n.get_den() != 1) throw std::logic_error("nrd of an order element must be integral");
    return n.get_num();
}

inline Int trd(const OrderElement& x) { return 2 * x.coords()[0] + x.coords()[1]; }

inline bool is_zero(const OrderElement& x) {
    const auto& y = x.coords();
    return y[0] == 0 && y[1] == 0 && y[2] == 0 && y[3] == 0;
}

// w0 = 1, w1 = (1+alpha)/2, w2 = F(1+alpha)/2, w3 = (a+F)alpha/q.
inline std::array<OrderElement, 4> order_basis(const AlgebraParams& par) {
    return {OrderElement(par, 1, 0, 0, 0), OrderElement(par, 0, 1, 0, 0),
            OrderElement(par, 0, 0, 1, 0), OrderElement(par, 0, 0, 0, 1)};
}

}  // namespace nslat
