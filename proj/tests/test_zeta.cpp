#include <doctest.h>

#include "hmf/zeta.hpp"
#include "test_util.hpp"

using namespace hmf;
using namespace testutil;

TEST_CASE("small zeta values")
{
    CHECK(zeta_at(sqrt3(), 2) == qq(1, 6));
    CHECK(zeta_at(cubic49(), 2) == qq(-1, 21));
    CHECK(zeta_at(cubic1944(), 2) == qq(-70, 3));
    CHECK(zeta_at(cubic1944(), 4) == parse_rational("2556221/15"));
    // Q(sqrt5) in the basis 1, (1+sqrt5)/2
    CHECK(zeta_at(number_field::make({-1, -1, 1}), 2) == qq(1, 30));
    // over Q the method returns the Riemann values -B_k / k
    CHECK(zeta_at(number_field::make({0, 1}), 2) == qq(-1, 12));
    CHECK(zeta_at(number_field::make({0, 1}), 12) == parse_rational("691/32760"));
}

TEST_CASE("zeta value factorization")
{
    auto z = zeta_special_value(sqrt3(), 18);
    CHECK(z.value == parse_rational("514802473837215246476827/7182"));
    REQUIRE(z.den.factors.size() == 4);
    CHECK(z.den.factors[0] == std::make_pair(zz(2), 1));
    CHECK(z.den.factors[1] == std::make_pair(zz(3), 3));
    CHECK(z.den.factors[2] == std::make_pair(zz(7), 1));
    CHECK(z.den.factors[3] == std::make_pair(zz(19), 1));
}

TEST_CASE("bad weights")
{
    CHECK_THROWS_AS(zeta_special_value(sqrt3(), 3), hmf_error);
    CHECK_THROWS_AS(zeta_special_value(sqrt3(), 0), hmf_error);
}

TEST_CASE("Euler factors at p")
{
    // (2) = P^2, Nm P = 2: (1 - 2) * 1/6
    CHECK(p_adic_zeta(sqrt3(), 2, 2) == qq(-1, 6));
    // (7) = P^3 in the cyclic cubic: (1 - 7) * (-1/21)
    CHECK(p_adic_zeta(cubic49(), 7, 2) == qq(2, 7));
    // inert 5 in Q(sqrt3): (1 - 25) * 1/6
    CHECK(p_adic_zeta(sqrt3(), 5, 2) == -4);
}

TEST_CASE("p-adic limits")
{
    auto F = sqrt3();
    // integer weight: agrees with the Euler-factor value mod p^n
    for (int n = 1; n <= 3; n++) {
        auto r = p_adic_zeta_limit(F, 5, padic_weight::integer(5, 2), n);
        CHECK(r.value == padic_reduce(p_adic_zeta(F, 5, 2), 5, n));
    }
    // inert 7, class of 2: (1 - 49) zeta(-1) mod 7
    auto r7 = p_adic_zeta_limit(F, 7, padic_weight::integer(7, 2), 1);
    CHECK(r7.value == padic_reduce(qq(-48) / 6, 7, 1));
    CHECK(r7.k2 == 8);
    // p = 3: (1 - 3) / 6 = -1/3 has valuation -1
    auto r3 = p_adic_zeta_limit(F, 3, padic_weight::integer(3, 2), 1);
    CHECK(r3.valuation == -1);
    CHECK(r3.value == padic_reduce(qq(-1, 3), 3, 1));
    // a digit weight in the class of 2 gives the same limit
    auto d = p_adic_zeta_limit(F, 5, padic_weight::from_digits(5, 2, 2, 3), 2);
    CHECK(d.value == p_adic_zeta_limit(F, 5, padic_weight::integer(5, 2), 2).value);
    CHECK_THROWS_AS(p_adic_zeta_limit(F, 5, padic_weight::integer(7, 2), 1), hmf_error);
}

TEST_CASE("padic_reduce")
{
    CHECK(padic_reduce(qq(7), 5, 1) == 2);
    CHECK(padic_reduce(qq(1, 5), 5, 1) == qq(1, 5));
    CHECK(padic_reduce(qq(-1), 3, 2) == 8);
    CHECK(padic_reduce(qq(0), 3, 2) == 0);
}
