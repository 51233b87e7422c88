#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nslat/arith.hpp"
#include "nslat/quat.hpp"

namespace nslat {

/// F_p with canonical representatives in [0, p).
class PrimeField {
  public:
    using Element = Int;

    explicit PrimeField(Int p) : p_(std::move(p)) {}

    const Int& p() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element reduce(const Int& x) const { return mod_reduce(x, p_); }

    // num/den mod p; den must be prime to p.
    Element reduce(const Rat& x) const {
        const Int den = mod_reduce(x.get_den(), p_);
        return mod_reduce(x.get_num() * mod_inverse(den, p_), p_);
    }

    Element add(const Element& x, const Element& y) const { return mod_reduce(x + y, p_); }
    Element sub(const Element& x, const Element& y) const { return mod_reduce(x - y, p_); }
    Element mul(const Element& x, const Element& y) const { return mod_reduce(x * y, p_); }
    Element neg(const Element& x) const { return mod_reduce(-x, p_); }

    Element inv(const Element& x) const {
        if (is_zero(x)) throw std::domain_error("division by zero in F_p");
        return mod_inverse(x, p_);
    }

    bool is_zero(const Element& x) const { return mod_reduce(x, p_) == 0; }

  private:
    Int p_;
};

/// Element of F_{p^2} = F_p(t), written c0 + c1*t.
struct Fp2 {
    Int c0;
    Int c1;
    bool operator==(const Fp2&) const = default;
};

/**
 * F_{p^2} realized as F_p[t]/(t^2 + q). The defining relation t^2 = -q mod p
 * makes t an image of alpha under reduction of the order; -q is a
 * non-residue mod p, so the quotient is a field. Frobenius is c0 - c1*t.
 */
class QuadField {
  public:
    QuadField(const Int& p, const Int& q) : base_(p), t2_(mod_reduce(-q, p)) {}
    explicit QuadField(const AlgebraParams& par) : QuadField(par.p, par.q) {}

    using Element = Fp2;

    const Int& p() const { return base_.p(); }
    const Int& t_squared() const { return t2_; }
    const PrimeField& base() const { return base_; }

    Element zero() const { return {0, 0}; }
    Element one() const { return {1, 0}; }
    Element t() const { return {0, 1}; }
    Element elem(const Int& c0, const Int& c1) const {
        return {base_.reduce(c0), base_.reduce(c1)};
    }
    Element from_int(const Int& n) const { return {base_.reduce(n), 0}; }
    Element from_rat(const Rat& x) const { return {base_.reduce(x), 0}; }

    Element add(const Element& x, const Element& y) const {
        return {base_.add(x.c0, y.c0), base_.add(x.c1, y.c1)};
    }
    Element sub(const Element& x, const Element& y) const {
        return {base_.sub(x.c0, y.c0), base_.sub(x.c1, y.c1)};
    }
    Element neg(const Element& x) const { return {base_.neg(x.c0), base_.neg(x.c1)}; }

    Element mul(const Element& x, const Element& y) const {
        Int c0 = x.c0 * y.c0 + t2_ * x.c1 * y.c1;
        Int c1 = x.c0 * y.c1 + x.c1 * y.c0;
        return {base_.reduce(c0), base_.reduce(c1)};
    }

    // Norm to F_p: x * frobenius(x) = c0^2 - t^2 c1^2.
    Int norm(const Element& x) const {
        return base_.reduce(Int(x.c0 * x.c0 - t2_ * x.c1 * x.c1));
    }

    Element inv(const Element& x) const {
        if (is_zero(x)) throw std::domain_error("division by zero in F_{p^2}");
        const Int ninv = base_.inv(norm(x));
        return {base_.mul(x.c0, ninv), base_.mul(base_.neg(x.c1), ninv)};
    }

    Element frobenius(const Element& x) const { return {x.c0, base_.neg(x.c1)}; }

    Element pow(Element x, Int e) const {
        Element r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(const Element& x) const { return x.c0 == 0 && x.c1 == 0; }

  private:
    PrimeField base_;
    Int t2_;
};

inline std::string to_string(const Fp2& x) {
    if (x.c1 == 0) return x.c0.get_str();
    const std::string ts = x.c1 == 1 ? "t" : x.c1.get_str() + "t";
    if (x.c0 == 0) return ts;
    return x.c0.get_str() + "+" + ts;
}

}  // namespace nslat
