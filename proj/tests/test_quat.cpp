#include <array>
#include <random>

#include "catch_amalgamated.hpp"
#include "nslat/quat.hpp"

using namespace nslat;

namespace {

const AlgebraParams kP3{3, 19, 4};

// Independent multiplication oracle: e0 = 1, e1 = F, e2 = alpha, e3 = F*alpha,
// with each basis product tabulated by hand from F^2 = -p, alpha^2 = -q,
// F*alpha = -alpha*F. Entry {c, k} means e_i * e_j = c * e_k.
struct TableEntry {
    long c;
    int k;
};

std::array<std::array<TableEntry, 4>, 4> mul_table(long p, long q) {
    return {{
        {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
        {{{1, 1}, {-p, 0}, {1, 3}, {-p, 2}}},
        {{{1, 2}, {-1, 3}, {-q, 0}, {q, 1}}},
        {{{1, 3}, {p, 2}, {-q, 1}, {-p * q, 0}}},
    }};
}

QuatElement table_mul(const QuatElement& x, const QuatElement& y) {
    const auto& par = x.params();
    const auto tab = mul_table(par.p.get_si(), par.q.get_si());
    std::array<Rat, 4> z{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z[tab[i][j].k] += x[i] * y[j] * tab[i][j].c;
    return {par, z[0], z[1], z[2], z[3]};
}

QuatElement unit(const AlgebraParams& par, int i) {
    return {par, Rat(i == 0), Rat(i == 1), Rat(i == 2), Rat(i == 3)};
}

// Exhaustive search oracle for the parameter triple, using GMP's Legendre
// implementation instead of the Euler-criterion route.
AlgebraParams brute_params(long p) {
    for (long q = 3; q < 1000; ++q) {
        bool prime = q > 1;
        for (long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime || q == p || q % 8 != 3) continue;
        const Int mq(-q), pz(p);
        if (mpz_legendre(mq.get_mpz_t(), pz.get_mpz_t()) != -1) continue;
        for (long a = 0; a < q; ++a)
            if ((a * a + p) % q == 0) return {Int(p), Int(q), Int(a)};
    }
    throw std::runtime_error("brute_params failed");
}

}  // namespace

TEST_CASE("basis products match the hand table") {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const auto got = unit(kP3, i) * unit(kP3, j);
            const auto tab = mul_table(3, 19);
            std::array<Rat, 4> want{Rat(0), Rat(0), Rat(0), Rat(0)};
            want[tab[i][j].k] = tab[i][j].c;
            for (int k = 0; k < 4; ++k) REQUIRE(got[k] == want[k]);
        }
}

TEST_CASE("defining relations") {
    const auto f = QuatElement::gen_f(kP3);
    const auto al = QuatElement::gen_alpha(kP3);
    const auto fa = f * al;
    REQUIRE(fa == unit(kP3, 3));
    REQUIRE(al * f == -fa);
    REQUIRE(f * f == QuatElement::scalar(kP3, Rat(-3)));
    REQUIRE(al * al == QuatElement::scalar(kP3, Rat(-19)));
    REQUIRE(fa * fa == QuatElement::scalar(kP3, Rat(-57)));
}

TEST_CASE("random products agree with the table oracle") {
    std::mt19937_64 rng(777);
    auto rr = [&]() {
        Rat r(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 7) + 1);
        r.canonicalize();
        return r;
    };
    for (int i = 0; i < 500; ++i) {
        const QuatElement x(kP3, rr(), rr(), rr(), rr());
        const QuatElement y(kP3, rr(), rr(), rr(), rr());
        REQUIRE(x * y == table_mul(x, y));
    }
}

TEST_CASE("conj, nrd, trd basics") {
    const auto f = QuatElement::gen_f(kP3);
    REQUIRE(conj(f) == -f);
    REQUIRE(nrd(f) == 3);
    REQUIRE(trd(f) == 0);
    const QuatElement x(kP3, Rat(1, 2), Rat(3), Rat(-2), Rat(5, 7));
    REQUIRE(trd(x) == Rat(1));
    REQUIRE(x + conj(x) == QuatElement::scalar(kP3, trd(x)));
    REQUIRE(x * conj(x) == QuatElement::scalar(kP3, nrd(x)));
    REQUIRE(nrd(x) > 0);
}

TEST_CASE("mismatched parameters are rejected") {
    const AlgebraParams other{5, 3, 1};
    REQUIRE_THROWS_AS(QuatElement::one(kP3) * QuatElement::one(other), MismatchedParams);
    REQUIRE_THROWS_AS(QuatElement::one(kP3) + QuatElement::gen_f(other), MismatchedParams);
}

TEST_CASE("find_params frozen values") {
    const auto p3 = find_params(3);
    REQUIRE(p3.q == 19);
    REQUIRE(p3.a == 4);
    const auto p5 = find_params(5);
    REQUIRE(p5.q == 3);
    REQUIRE(p5.a == 1);
    const auto p7 = find_params(7);
    REQUIRE(p7.q == 11);
    REQUIRE(p7.a == 2);
    REQUIRE(find_params(3) == p3);  // deterministic
}

TEST_CASE("find_params matches the exhaustive oracle") {
    for (const long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 97L, 199L}) {
        const auto want = brute_params(p);
        const auto got = find_params(Int(p));
        REQUIRE(got == want);
        REQUIRE_NOTHROW(validate_params(got));
    }
}

TEST_CASE("find_params rejects bad input") {
    REQUIRE_THROWS_AS(find_params(Int(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(find_params(Int(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(find_params(Int(-3)), std::invalid_argument);
    REQUIRE_THROWS_AS(find_params(Int(3), Int(10)), QSearchExhausted);
}

TEST_CASE("validate_params rejects each broken invariant") {
    REQUIRE_NOTHROW(validate_params(kP3));
    REQUIRE_THROWS_AS(validate_params({4, 19, 4}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_params({3, 18, 4}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_params({3, 3, 0}), std::invalid_argument);   // q = p
    REQUIRE_THROWS_AS(validate_params({3, 7, 2}), std::invalid_argument);   // q = 7 (mod 8)
    REQUIRE_THROWS_AS(validate_params({3, 11, 3}), std::invalid_argument);  // -q residue mod p
    REQUIRE_THROWS_AS(validate_params({3, 19, 15 + 19}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate_params({3, 19, 5}), std::invalid_argument);  // a^2 != -p
}

TEST_CASE("order coordinate conversion on named elements") {
    const auto one = QuatElement::one(kP3);
    REQUIRE(to_order_coords(one) == std::array<Int, 4>{1, 0, 0, 0});
    const auto al = QuatElement::gen_alpha(kP3);
    REQUIRE(to_order_coords(al) == std::array<Int, 4>{-1, 2, 0, 0});
    const auto w2 = QuatElement(kP3, 0, Rat(1, 2), 0, Rat(1, 2));  // F(1+alpha)/2
    REQUIRE(to_order_coords(w2) == std::array<Int, 4>{0, 0, 1, 0});
}

TEST_CASE("half alpha is rejected with its rational coordinates") {
    try {
        to_order_coords(QuatElement(kP3, 0, 0, Rat(1, 2), 0));
        FAIL("alpha/2 must not convert");
    } catch (const NotInOrder& e) {
        REQUIRE(e.rational_coords == std::array<Rat, 4>{Rat(-1, 2), Rat(1), Rat(0), Rat(0)});
    }
}

TEST_CASE("order basis norms and traces") {
    const auto w = order_basis(kP3);
    REQUIRE(nrd(w[0]) == 1);
    REQUIRE(nrd(w[1]) == 5);   // (1+q)/4
    REQUIRE(nrd(w[2]) == 15);  // p(1+q)/4
    REQUIRE(nrd(w[3]) == 1);   // (a^2+p)/q
    REQUIRE(trd(w[0]) == 2);
    REQUIRE(trd(w[1]) == 1);
    REQUIRE(trd(w[2]) == 0);
    REQUIRE(trd(w[3]) == 0);
    for (const auto& par : {find_params(5), find_params(7), find_params(13)}) {
        const auto v = order_basis(par);
        REQUIRE(nrd(v[1]) == (1 + par.q) / 4);
        REQUIRE(nrd(v[2]) == par.p * (1 + par.q) / 4);
        REQUIRE(nrd(v[3]) == (par.a * par.a + par.p) / par.q);
    }
}

TEST_CASE("order element products stay integral") {
    const auto w = order_basis(kP3);
    REQUIRE((w[1] * w[1]).coords() == std::array<Int, 4>{-5, 1, 0, 0});  // w1^2 = w1 - (1+q)/4
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) REQUIRE_NOTHROW(w[i] * w[j]);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        auto rc = [&]() { return Int(static_cast<long>(rng() % 41) - 20); };
        const OrderElement x(kP3, rc(), rc(), rc(), rc());
        const OrderElement y(kP3, rc(), rc(), rc(), rc());
        const auto z = x * y;
        REQUIRE(z.to_quat() == x.to_quat() * y.to_quat());
        REQUIRE(conj(x) == order_from_quat(conj(x.to_quat())));
        REQUIRE(to_order_coords(x.to_quat()) == x.coords());
        REQUIRE(trd(x) == 2 * x.coords()[0] + x.coords()[1]);
    }
}
