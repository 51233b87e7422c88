#include <array>

#include "catch_amalgamated.hpp"
#include "nslat/checks.hpp"
#include "nslat/ns_lattice.hpp"

using namespace nslat;

namespace {
const AlgebraParams kP3{3, 19, 4};

// Intersection matrix of the fixed basis at p = 3, entries worked out by
// hand from A2*D1 + A1*D2 - trd(conj(b1) b2) and Delta_x . Delta_y = nrd(x-y).
const std::array<std::array<long, 6>, 6> kGramP3 = {{
    {0, 1, 1, 1, 1, 1},
    {1, 0, 1, 5, 15, 1},
    {1, 1, 0, 5, 16, 2},
    {1, 5, 5, 0, 20, 2},
    {1, 15, 16, 20, 0, 13},
    {1, 1, 2, 2, 13, 0},
}};
}  // namespace

TEST_CASE("j_of_delta named values") {
    const auto one = OrderElement::one(kP3);
    const auto w = order_basis(kP3);

    const auto delta = j_of_delta(one, one);
    REQUIRE(delta.A == 1);
    REQUIRE(delta.D == 1);
    REQUIRE(delta.beta == one);

    const auto e2_like = j_of_delta(one, OrderElement::zero(kP3));
    REQUIRE(e2_like == divisor_e2(kP3));

    const auto d1 = j_of_delta(one, w[1]);
    REQUIRE(d1.A == 1);
    REQUIRE(d1.D == 5);
    REQUIRE(d1.beta == w[1]);
}

TEST_CASE("basis divisors") {
    const auto b = basis_divisors(kP3);
    const auto w = order_basis(kP3);
    REQUIRE(b[0].A == 0);
    REQUIRE(b[0].D == 1);
    REQUIRE(is_zero(b[0].beta));
    REQUIRE(b[1].A == 1);
    REQUIRE(b[1].D == 0);
    REQUIRE(b[2].A == 1);
    REQUIRE(b[2].D == 1);
    REQUIRE(b[2].beta == OrderElement::one(kP3));
    REQUIRE(b[5].A == 1);
    REQUIRE(b[5].D == 1);
    REQUIRE(b[5].beta == w[3]);
}

TEST_CASE("coordinate round trips and the worked example") {
    // [[2, 1], [1, 1]] with beta = 1 decomposes as E2 + Delta
    const DivisorMatrix m{2, 1, OrderElement::one(kP3)};
    REQUIRE(matrix_to_coords(m) == DivisorCoords{0, 1, 1, 0, 0, 0});
    REQUIRE(coords_to_matrix(kP3, {0, 1, 1, 0, 0, 0}) == m);

    const DivisorCoords sum{1, 1, 0, 0, 0, 0};  // E1 + E2
    const auto s = coords_to_matrix(kP3, sum);
    REQUIRE(self_int(s) == 2);
    REQUIRE(matrix_to_coords(s) == sum);
}

TEST_CASE("intersection numbers of the standard classes") {
    const auto b = basis_divisors(kP3);
    REQUIRE(intersect(b[0], b[1]) == 1);  // E1 . E2
    REQUIRE(self_int(b[0]) == 0);
    REQUIRE(self_int(b[1]) == 0);
    REQUIRE(intersect(b[2], b[0]) == 1);  // Delta . E1
    REQUIRE(intersect(b[2], b[1]) == 1);
    REQUIRE(self_int(b[2]) == 0);
    REQUIRE(intersect(b[2], b[4]) == 16);  // Delta . Delta_w2 = nrd(1 - w2)
    const AlgebraParams other{5, 3, 1};
    REQUIRE_THROWS_AS(intersect(basis_divisors(other)[0], b[0]), MismatchedParams);
}

TEST_CASE("gram matrix at p = 3 matches the hand computation") {
    const auto gram = gram_matrix(kP3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) REQUIRE(gram.entries[i][j] == kGramP3[i][j]);
    REQUIRE(gram.rank == 6);
    REQUIRE(gram.positive == 1);
    REQUIRE(gram.negative == 5);
}

TEST_CASE("gram signature across small primes") {
    for (const long p : {3L, 5L, 7L, 11L, 13L}) {
        const auto gram = gram_matrix(find_params(Int(p)));
        REQUIRE(gram.rank == 6);
        REQUIRE(gram.positive == 1);
        REQUIRE(gram.negative == 5);
    }
}

TEST_CASE("pullback identities") {
    const auto one = OrderElement::one(kP3);
    const auto zero = OrderElement::zero(kP3);
    const auto w = order_basis(kP3);
    const OrderMat swap{zero, one, one, zero};
    REQUIRE(pullback(swap, divisor_e1(kP3)) == divisor_e2(kP3));
    REQUIRE(pullback(swap, divisor_e2(kP3)) == divisor_e1(kP3));

    const auto delta = j_of_delta(one, one);
    const OrderMat diag{one, zero, zero, w[1]};
    REQUIRE(pullback(diag, delta) == j_of_delta(one, w[1]));

    const OrderMat id{one, zero, zero, one};
    REQUIRE(pullback(id, delta) == delta);
}

TEST_CASE("symmetric spectrum on known matrices") {
    // diag(2, -3, 0) has rank 2, signature (1, 1)
    const std::vector<std::vector<Int>> d{{2, 0, 0}, {0, -3, 0}, {0, 0, 0}};
    const auto sp = symmetric_spectrum(d);
    REQUIRE(sp.rank == 2);
    REQUIRE(sp.positive == 1);
    REQUIRE(sp.negative == 1);
    REQUIRE(sp.det == 0);

    const std::vector<std::vector<Int>> h{{0, 1}, {1, 0}};  // hyperbolic plane
    const auto sph = symmetric_spectrum(h);
    REQUIRE(sph.rank == 2);
    REQUIRE(sph.positive == 1);
    REQUIRE(sph.negative == 1);
    REQUIRE(sph.det == -1);

    const std::vector<std::vector<Int>> s{{2, 1}, {1, 2}};
    const auto sps = symmetric_spectrum(s);
    REQUIRE(sps.positive == 2);
    REQUIRE(sps.negative == 0);
    REQUIRE(sps.det == 3);
}

TEST_CASE("lattice property suites") {
    for (const auto& par : {kP3, find_params(5)}) {
        REQUIRE(check_transition_unimodular(par).pass);
        REQUIRE(check_coords_round_trip(par, 1000, kDefaultSeed).pass);
        REQUIRE(check_delta_intersection(par, 1000, kDefaultSeed).pass);
        REQUIRE(check_line_intersections(par, 1000, kDefaultSeed).pass);
        REQUIRE(check_pullback_laws(par, 250, kDefaultSeed).pass);
        REQUIRE(check_gram_signature(gram_matrix(par)).pass);
    }
}
