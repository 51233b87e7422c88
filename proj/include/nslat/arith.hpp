#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace nslat {

using Int = mpz_class;
using Rat = mpq_class;

// Canonical representative of x mod m in [0, m).
inline Int mod_reduce(const Int& x, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int pow_mod(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int mod_inverse(const Int& x, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod " + m.get_str());
    return r;
}

// Deterministic Miller-Rabin. The fixed base set is known to decide
// primality correctly for all n < 3.3e24, far beyond anything used here.
inline bool is_prime(const Int& n) {
    static constexpr int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (int b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    Int d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (int b : bases) {
        Int x = pow_mod(b, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 0; i + 1 < s; ++i) {
            x = mod_reduce(x * x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Legendre symbol (x|p) by Euler's criterion; p must be an odd prime.
inline int legendre(const Int& x, const Int& p) {
    const Int r = pow_mod(mod_reduce(x, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::domain_error("legendre: modulus is not an odd prime");
}

// Smaller of the two square roots of n mod an odd prime q, if n is a
// residue. q = 3 (mod 4) admits the direct exponent n^((q+1)/4); the
// general case falls back to Tonelli-Shanks.
inline std::optional<Int> sqrt_mod_prime(const Int& n0, const Int& q) {
    const Int n = mod_reduce(n0, q);
    if (n == 0) return Int(0);
    if (legendre(n, q) != 1) return std::nullopt;
    Int r;
    if (mod_reduce(q, 4) == 3) {
        r = pow_mod(n, (q + 1) / 4, q);
    } else {
        Int d = q - 1;
        const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
        Int z = 2;
        while (legendre(z, q) != -1) ++z;
        unsigned long m = s;
        Int c = pow_mod(z, d, q);
        Int t = pow_mod(n, d, q);
        r = pow_mod(n, (d + 1) / 2, q);
        while (t != 1) {
            unsigned long i = 0;
            Int t2 = t;
            while (t2 != 1) {
                t2 = mod_reduce(t2 * t2, q);
                ++i;
            }
            Int b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_reduce(b * b, q);
            m = i;
            c = mod_reduce(b * b, q);
            t = mod_reduce(t * c, q);
            r = mod_reduce(r * b, q);
        }
    }
    const Int other = q - r;
    return r <= other ? r : other;
}

}  // namespace nslat
