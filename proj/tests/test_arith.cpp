#include <random>

#include "catch_amalgamated.hpp"
#include "nslat/arith.hpp"

using namespace nslat;

TEST_CASE("is_prime on small and structured inputs") {
    REQUIRE_FALSE(is_prime(Int(-7)));
    REQUIRE_FALSE(is_prime(Int(0)));
    REQUIRE_FALSE(is_prime(Int(1)));
    REQUIRE(is_prime(Int(2)));
    REQUIRE(is_prime(Int(3)));
    REQUIRE_FALSE(is_prime(Int(4)));
    REQUIRE(is_prime(Int(97)));
    REQUIRE_FALSE(is_prime(Int(561)));    // Carmichael
    REQUIRE_FALSE(is_prime(Int(62745)));  // Carmichael
    REQUIRE(is_prime(Int(99991)));
    REQUIRE_FALSE(is_prime(Int(99989) * Int(99991)));
    REQUIRE(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST_CASE("is_prime agrees with GMP on a range") {
    for (int n = 0; n < 2000; ++n) {
        const Int m(n);
        REQUIRE(is_prime(m) == (mpz_probab_prime_p(m.get_mpz_t(), 40) > 0));
    }
}

TEST_CASE("legendre via Euler matches mpz_legendre") {
    const int primes[] = {3, 5, 7, 11, 13, 101, 9973};
    std::mt19937_64 rng(12345);
    for (const int p : primes) {
        const Int pz(p);
        for (int i = 0; i < 200; ++i) {
            const Int x(static_cast<long>(rng() % 20011) - 10000);
            REQUIRE(legendre(x, pz) == mpz_legendre(x.get_mpz_t(), pz.get_mpz_t()));
        }
        REQUIRE(legendre(pz * 5, pz) == 0);
    }
}

TEST_CASE("mod_inverse and pow_mod") {
    REQUIRE(mod_reduce(mod_inverse(Int(2), Int(19)) * 2, Int(19)) == 1);
    REQUIRE(mod_inverse(Int(38), Int(3)) == 2);
    REQUIRE_THROWS_AS(mod_inverse(Int(6), Int(9)), std::domain_error);
    REQUIRE(pow_mod(Int(2), Int(10), Int(1000)) == 24);
    REQUIRE(pow_mod(Int(-19), Int(1), Int(3)) == 2);
}

TEST_CASE("sqrt_mod_prime returns the smaller root") {
    // q = 3 (mod 4) fast path
    REQUIRE(sqrt_mod_prime(Int(-3), Int(19)) == Int(4));
    REQUIRE(sqrt_mod_prime(Int(-5), Int(3)) == Int(1));
    REQUIRE(sqrt_mod_prime(Int(-7), Int(11)) == Int(2));
    // Tonelli-Shanks branch
    REQUIRE(sqrt_mod_prime(Int(4), Int(13)) == Int(2));
    REQUIRE(sqrt_mod_prime(Int(2), Int(17)) == Int(6));
    // non-residues and zero
    REQUIRE_FALSE(sqrt_mod_prime(Int(5), Int(13)).has_value());
    REQUIRE(sqrt_mod_prime(Int(26), Int(13)) == Int(0));
}

TEST_CASE("sqrt_mod_prime against brute force") {
    const int primes[] = {3, 7, 11, 13, 17, 19, 23, 29, 41, 97};
    for (const int qi : primes) {
        const Int q(qi);
        for (int n = 0; n < qi; ++n) {
            int smallest = -1;
            for (int r = 0; r <= qi / 2; ++r) {
                if ((r * r) % qi == n) {
                    smallest = r;
                    break;
                }
            }
            const auto got = sqrt_mod_prime(Int(n), q);
            if (smallest < 0) {
                REQUIRE_FALSE(got.has_value());
            } else {
                REQUIRE(got.has_value());
                REQUIRE(*got == smallest);
            }
        }
    }
}
