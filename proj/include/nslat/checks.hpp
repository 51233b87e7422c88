#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nslat/chern.hpp"
#include "nslat/fields.hpp"
#include "nslat/linalg.hpp"
#include "nslat/ns_lattice.hpp"
#include "nslat/quat.hpp"

namespace nslat {

inline constexpr std::uint64_t kDefaultSeed = 0x9e3779b97f4a7c15ull;
inline constexpr std::size_t kDefaultSamples = 1000;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    bool operator==(const CheckResult&) const = default;
};

namespace gen {

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rat rand_rat(std::mt19937_64& rng) {
    Rat r(rand_long(rng, -30, 30), rand_long(rng, 1, 8));
    r.canonicalize();
    return r;
}

inline QuatElement rand_quat(std::mt19937_64& rng, const AlgebraParams& par) {
    return {par, rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng)};
}

inline OrderElement rand_order(std::mt19937_64& rng, const AlgebraParams& par, long bound = 20) {
    return {par, Int(rand_long(rng, -bound, bound)), Int(rand_long(rng, -bound, bound)),
            Int(rand_long(rng, -bound, bound)), Int(rand_long(rng, -bound, bound))};
}

inline DivisorMatrix rand_divisor(std::mt19937_64& rng, const AlgebraParams& par) {
    return {Int(rand_long(rng, -10, 10)), Int(rand_long(rng, -10, 10)), rand_order(rng, par, 8)};
}

inline DivisorCoords rand_coords(std::mt19937_64& rng, long bound = 50) {
    DivisorCoords v;
    for (auto& c : v) c = Int(rand_long(rng, -bound, bound));
    return v;
}

}  // namespace gen

namespace detail {

inline CheckResult pass_result(std::string name, std::size_t samples) {
    return {std::move(name), true, std::to_string(samples) + " cases"};
}

inline CheckResult fail_result(std::string name, std::size_t at, std::string what) {
    return {std::move(name), false, "case " + std::to_string(at) + ": " + std::move(what)};
}

}  // namespace detail

inline CheckResult check_conj_anti_automorphism(const AlgebraParams& par, std::size_t samples,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_quat(rng, par);
        const auto y = gen::rand_quat(rng, par);
        if (!(conj(x * y) == conj(y) * conj(x)))
            return detail::fail_result("quat.conj-anti-automorphism", i,
                                       "conj(xy) != conj(y)conj(x)");
        if (!(conj(conj(x)) == x))
            return detail::fail_result("quat.conj-anti-automorphism", i, "conj not involutive");
    }
    return detail::pass_result("quat.conj-anti-automorphism", samples);
}

inline CheckResult check_nrd_trd(const AlgebraParams& par, std::size_t samples,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_quat(rng, par);
        const auto y = gen::rand_quat(rng, par);
        if (nrd(x * y) != nrd(x) * nrd(y))
            return detail::fail_result("quat.nrd-multiplicative", i, "nrd(xy) != nrd(x)nrd(y)");
        if (!(x + conj(x) == QuatElement::scalar(par, trd(x))))
            return detail::fail_result("quat.nrd-multiplicative", i, "x + conj(x) != trd(x)");
        if (!is_zero(x) && nrd(x) <= 0)
            return detail::fail_result("quat.nrd-multiplicative", i, "nrd not positive definite");
        if (!(x * conj(x) == QuatElement::scalar(par, nrd(x))))
            return detail::fail_result("quat.nrd-multiplicative", i, "x * conj(x) != nrd(x)");
    }
    return detail::pass_result("quat.nrd-multiplicative", samples);
}

inline CheckResult check_quat_associativity(const AlgebraParams& par, std::size_t samples,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_quat(rng, par);
        const auto y = gen::rand_quat(rng, par);
        const auto z = gen::rand_quat(rng, par);
        if (!((x * y) * z == x * (y * z)))
            return detail::fail_result("quat.associative", i, "(xy)z != x(yz)");
        if (!(x * (y + z) == x * y + x * z))
            return detail::fail_result("quat.associative", i, "left distributivity fails");
    }
    return detail::pass_result("quat.associative", samples);
}

inline CheckResult check_order_closure(const AlgebraParams& par, std::size_t samples,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto w = order_basis(par);
    try {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) (void)(w[i] * w[j]);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto x = gen::rand_order(rng, par);
            const auto y = gen::rand_order(rng, par);
            (void)(x * y);
            if (!(conj(x) == order_from_quat(conj(x.to_quat()))))
                return detail::fail_result("order.ring-closure", i,
                                           "closed-form conj disagrees with algebra conj");
        }
    } catch (const NotInOrder&) {
        return {"order.ring-closure", false, "product left the order"};
    }
    return detail::pass_result("order.ring-closure", samples);
}

inline CheckResult check_order_coords_round_trip(const AlgebraParams& par, std::size_t samples,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_order(rng, par, 1000);
        const auto back = to_order_coords(x.to_quat());
        if (back != x.coords())
            return detail::fail_result("order.coords-round-trip", i, "round trip changed coords");
    }
    return detail::pass_result("order.coords-round-trip", samples);
}

// Independent re-validation of the searched parameters: primality via GMP's
// own test and the Legendre conditions via mpz_legendre rather than the
// Euler-criterion routine used by the search.
inline CheckResult check_params_independent(const AlgebraParams& par) {
    const std::string name = "params.revalidate";
    if (mpz_probab_prime_p(par.p.get_mpz_t(), 40) == 0 || par.p < 3)
        return {name, false, "p fails independent primality"};
    if (mpz_probab_prime_p(par.q.get_mpz_t(), 40) == 0)
        return {name, false, "q fails independent primality"};
    if (par.q == par.p) return {name, false, "q = p"};
    if (mod_reduce(par.q, 8) != 3) return {name, false, "q != 3 (mod 8)"};
    if (mod_reduce(-par.q, 8) != 5) return {name, false, "-q != 5 (mod 8)"};
    const Int mq = -par.q;
    if (mpz_legendre(mq.get_mpz_t(), par.p.get_mpz_t()) != -1)
        return {name, false, "-q is a residue mod p (mpz_legendre)"};
    if (legendre(-par.q, par.p) != -1)
        return {name, false, "-q is a residue mod p (Euler criterion)"};
    if (par.a < 0 || par.a >= par.q) return {name, false, "a outside [0, q)"};
    if (mod_reduce(par.a * par.a + par.p, par.q) != 0) return {name, false, "a^2 != -p (mod q)"};
    return {name, true, "all invariants re-checked"};
}

inline CheckResult check_transition_unimodular(const AlgebraParams& par) {
    const auto b = basis_divisors(par);
    std::vector<std::vector<Rat>> t(6, std::vector<Rat>(6));
    for (int j = 0; j < 6; ++j) {
        t[0][j] = Rat(b[j].A);
        t[1][j] = Rat(b[j].D);
        for (int k = 0; k < 4; ++k) t[2 + k][j] = Rat(b[j].beta.coords()[k]);
    }
    const Rat d = det_rational(t);
    if (d == 1 || d == -1)
        return {"lattice.transition-unimodular", true, "det = " + d.get_str()};
    return {"lattice.transition-unimodular", false, "det = " + d.get_str()};
}

inline CheckResult check_coords_round_trip(const AlgebraParams& par, std::size_t samples,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto v = gen::rand_coords(rng);
        if (matrix_to_coords(coords_to_matrix(par, v)) != v)
            return detail::fail_result("lattice.coords-round-trip", i, "round trip changed coords");
    }
    return detail::pass_result("lattice.coords-round-trip", samples);
}

inline CheckResult check_delta_intersection(const AlgebraParams& par, std::size_t samples,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto one = OrderElement::one(par);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_order(rng, par);
        const auto y = gen::rand_order(rng, par);
        const auto dx = j_of_delta(one, x);
        const auto dy = j_of_delta(one, y);
        if (intersect(dx, dy) != nrd(x - y))
            return detail::fail_result("lattice.delta-intersection", i,
                                       "Delta_x . Delta_y != nrd(x - y)");
        if (self_int(dx) != 0)
            return detail::fail_result("lattice.delta-intersection", i, "Delta_x^2 != 0");
    }
    return detail::pass_result("lattice.delta-intersection", samples);
}

inline CheckResult check_line_intersections(const AlgebraParams& par, std::size_t samples,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto e1 = divisor_e1(par);
    const auto e2 = divisor_e2(par);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto l = gen::rand_divisor(rng, par);
        if (intersect(l, e1) != l.A)
            return detail::fail_result("lattice.line-intersections", i, "L . E1 != A");
        if (intersect(l, e2) != l.D)
            return detail::fail_result("lattice.line-intersections", i, "L . E2 != D");
        const auto m = gen::rand_divisor(rng, par);
        if (intersect(l, m) != intersect(m, l))
            return detail::fail_result("lattice.line-intersections", i, "pairing not symmetric");
        if (self_int(l) != intersect(l, l))
            return detail::fail_result("lattice.line-intersections", i, "L^2 != L . L");
    }
    return detail::pass_result("lattice.line-intersections", samples);
}

inline CheckResult check_gram_signature(const GramResult& gram) {
    const std::string name = "lattice.gram-signature";
    for (int i = 0; i < 6; ++i) {
        if (mod_reduce(gram.entries[i][i], 2) != 0) return {name, false, "odd diagonal entry"};
        for (int j = 0; j < 6; ++j)
            if (gram.entries[i][j] != gram.entries[j][i]) return {name, false, "not symmetric"};
    }
    if (gram.rank != 6) return {name, false, "rank " + std::to_string(gram.rank)};
    if (gram.positive != 1 || gram.negative != 5)
        return {name, false,
                "signature (" + std::to_string(gram.positive) + "," +
                    std::to_string(gram.negative) + ")"};
    return {name, true, "rank 6, signature (1,5), det = " + gram.det.get_str()};
}

inline CheckResult check_pullback_laws(const AlgebraParams& par, std::size_t samples,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string name = "lattice.pullback-laws";
    const auto one = OrderElement::one(par);
    const auto zero = OrderElement::zero(par);
    const OrderMat id{one, zero, zero, one};
    const OrderMat swap{zero, one, one, zero};
    if (!(pullback(swap, divisor_e1(par)) == divisor_e2(par)))
        return {name, false, "swap does not exchange the rulings"};
    const auto delta = j_of_delta(one, one);
    for (const long u1 : {1L, -1L})
        for (const long u2 : {1L, -1L}) {
            const OrderMat d{one * Int(u1), zero, zero, one * Int(u2)};
            if (self_int(pullback(d, delta)) != self_int(delta))
                return {name, false, "diagonal unit changed Delta^2"};
        }
    for (std::size_t i = 0; i < samples; ++i) {
        const auto l = gen::rand_divisor(rng, par);
        if (!(pullback(id, l) == l)) return detail::fail_result(name, i, "identity law fails");
        const OrderMat g{gen::rand_order(rng, par, 5), gen::rand_order(rng, par, 5),
                         gen::rand_order(rng, par, 5), gen::rand_order(rng, par, 5)};
        const OrderMat h{gen::rand_order(rng, par, 5), gen::rand_order(rng, par, 5),
                         gen::rand_order(rng, par, 5), gen::rand_order(rng, par, 5)};
        if (!(pullback(mat_mul(g, h), l) == pullback(h, pullback(g, l))))
            return detail::fail_result(name, i, "composition law fails");
        const auto a1 = gen::rand_order(rng, par, 5);
        const auto a2 = gen::rand_order(rng, par, 5);
        const OrderMat diag{a1, zero, zero, a2};
        if (!(pullback(diag, delta) == j_of_delta(a1, a2)))
            return detail::fail_result(name, i, "diagonal pullback of Delta != j(a1, a2)");
    }
    return detail::pass_result(name, samples);
}

inline CheckResult check_phi_homomorphism(const AlgebraParams& par, const QuadField& f,
                                          std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string name = "chern.phi-homomorphism";
    if (!(phi(OrderElement::one(par), f) == f.one())) return {name, false, "phi(1) != 1"};
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_order(rng, par);
        const auto y = gen::rand_order(rng, par);
        if (!(phi(x + y, f) == f.add(phi(x, f), phi(y, f))))
            return detail::fail_result(name, i, "phi not additive");
        if (!(phi(x * y, f) == f.mul(phi(x, f), phi(y, f))))
            return detail::fail_result(name, i, "phi not multiplicative");
    }
    return detail::pass_result(name, samples);
}

inline CheckResult check_phi_conj_frobenius(const AlgebraParams& par, const QuadField& f,
                                            std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string name = "chern.phi-conj-frobenius";
    for (std::size_t i = 0; i < samples; ++i) {
        const auto x = gen::rand_order(rng, par);
        const auto px = phi(x, f);
        if (!(phi(conj(x), f) == f.frobenius(px)))
            return detail::fail_result(name, i, "phi(conj x) != Frob(phi x)");
        const Int n(gen::rand_long(rng, -1000, 1000));
        if (!(phi(OrderElement::from_int(par, n), f) == f.from_int(n)))
            return detail::fail_result(name, i, "phi wrong on integers");
        if (!f.is_zero(px)) {
            const auto expected = f.mul(f.from_int(nrd(x)), f.inv(px));
            if (!(f.frobenius(px) == expected))
                return detail::fail_result(name, i, "Frob(phi x) != nrd(x)/phi(x)");
        }
    }
    return detail::pass_result(name, samples);
}

inline CheckResult check_frobenius_is_pth_power(const AlgebraParams& par, const QuadField& f,
                                                std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string name = "field.frobenius-pth-power";
    for (std::size_t i = 0; i < samples; ++i) {
        const Fp2 x = f.elem(Int(gen::rand_long(rng, 0, 10000)),
                             Int(gen::rand_long(rng, 0, 10000)));
        if (!(f.pow(x, f.p()) == f.frobenius(x)))
            return detail::fail_result(name, i, "x^p != Frobenius(x)");
        if (!f.is_zero(x) && !(f.mul(x, f.inv(x)) == f.one()))
            return detail::fail_result(name, i, "x * x^-1 != 1");
    }
    return detail::pass_result(name, samples);
}

inline CheckResult check_u_columns(const ChernData& cd) {
    const std::string name = "chern.u-columns";
    if (cd.entries != expected_u_columns(cd.params, cd.field))
        return {name, false, "columns differ from the closed forms"};
    return {name, true, "all six columns match the closed forms"};
}

inline CheckResult check_u5_equals_u2(const ChernData& cd) {
    const std::string name = "chern.u5-equals-u2";
    if (cd.column(4) != cd.column(1)) return {name, false, "u5 != u2"};
    return {name, true, "u5 = u2"};
}

inline CheckResult check_image_rank(const ChernData& cd) {
    const std::string name = "chern.rank";
    Matrix<QuadField> m = cd.entries;
    const int r = rank(m, cd.field);
    if (r != 4) return {name, false, "rank over F_{p^2} is " + std::to_string(r)};
    return {name, true, "rank over F_{p^2} is 4"};
}

inline CheckResult check_kernel_dims(const KernelBasis& kb) {
    const std::string name = "kernel.dimensions";
    if (kb.dimension != 2 || kb.image_dimension != 4 ||
        kb.dimension + kb.image_dimension != 6 ||
        static_cast<int>(kb.vectors.size()) != kb.dimension)
        return {name, false,
                "dim " + std::to_string(kb.dimension) + ", image " +
                    std::to_string(kb.image_dimension)};
    return {name, true, "kernel 2, image 4"};
}

// Every kernel basis vector, lifted to a divisor through the lattice side,
// must map to zero; this bypasses the flattening and elimination entirely.
inline CheckResult check_kernel_lattice_path(const ChernData& cd, const KernelBasis& kb) {
    const std::string name = "kernel.lattice-path";
    for (const auto& v : kb.vectors) {
        const auto m = coords_to_matrix(cd.params, DivisorCoords{v[0], v[1], v[2], v[3], v[4], v[5]});
        for (const auto& x : c1_of_matrix(m, cd.field))
            if (!cd.field.is_zero(x)) return {name, false, "basis vector maps to nonzero class"};
    }
    return {name, true, std::to_string(kb.vectors.size()) + " vectors re-mapped to zero"};
}

// The kernel must not depend on which square root of -q the embedding
// picks: rebuilding the matrix with t -> -t gives the same subspace, and
// the two matrices agree on membership of random vectors.
inline CheckResult check_galois_invariance(const AlgebraParams& par, const KernelBasis& kb,
                                           std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::string name = "kernel.galois-invariance";
    const auto cd_plus = make_chern(par, 1);
    const auto cd_minus = make_chern(par, -1);
    const auto kb_minus = kernel_basis(cd_minus);
    if (kb.vectors != kb_minus.vectors)
        return {name, false, "canonical kernel basis changed under t -> -t"};
    const PrimeField fp(par.p);
    for (std::size_t i = 0; i < samples; ++i) {
        std::array<Int, 6> v;
        for (auto& c : v) c = fp.reduce(Int(gen::rand_long(rng, 0, 1000000)));
        if (evaluate(cd_plus, v).member != evaluate(cd_minus, v).member)
            return detail::fail_result(name, i, "membership differs under t -> -t");
    }
    return detail::pass_result(name, samples);
}

inline CheckResult check_audit_members(const KernelAudit& audit) {
    const std::string name = "audit.required-members";
    for (const auto& c : audit.candidates)
        if (c.name == "stated-1" && !c.member)
            return {name, false, "stated-1 is not a kernel member"};
    if (!audit.recomputed_member) return {name, false, "recomputed vector is not a kernel member"};
    if (audit.literal_in_order) return {name, false, "(2+F*alpha)/q claims to lie in the order"};
    return {name, true, "stated-1 and the recomputed vector lie in the kernel"};
}

inline std::vector<CheckResult> run_invariant_checks(const AlgebraParams& par,
                                                     std::size_t samples = kDefaultSamples,
                                                     std::uint64_t seed = kDefaultSeed) {
    const QuadField f(par);
    const auto cd = make_chern(par);
    const auto kb = kernel_basis(cd);
    const auto gram = gram_matrix(par);
    const auto audit = audit_kernel_candidates(cd);
    std::vector<CheckResult> out;
    out.push_back(check_params_independent(par));
    out.push_back(check_conj_anti_automorphism(par, samples, seed + 1));
    out.push_back(check_nrd_trd(par, samples, seed + 2));
    out.push_back(check_quat_associativity(par, samples, seed + 3));
    out.push_back(check_order_closure(par, samples, seed + 4));
    out.push_back(check_order_coords_round_trip(par, samples, seed + 5));
    out.push_back(check_transition_unimodular(par));
    out.push_back(check_coords_round_trip(par, samples, seed + 6));
    out.push_back(check_delta_intersection(par, samples, seed + 7));
    out.push_back(check_line_intersections(par, samples, seed + 8));
    out.push_back(check_gram_signature(gram));
    out.push_back(check_pullback_laws(par, samples / 4, seed + 9));
    out.push_back(check_phi_homomorphism(par, f, samples, seed + 10));
    out.push_back(check_phi_conj_frobenius(par, f, samples, seed + 11));
    out.push_back(check_frobenius_is_pth_power(par, f, samples, seed + 12));
    out.push_back(check_u_columns(cd));
    out.push_back(check_u5_equals_u2(cd));
    out.push_back(check_image_rank(cd));
    out.push_back(check_kernel_dims(kb));
    out.push_back(check_kernel_lattice_path(cd, kb));
    out.push_back(check_galois_invariance(par, kb, samples, seed + 13));
    out.push_back(check_audit_members(audit));
    return out;
}

}  // namespace nslat
